#include "sieveball/kernels.hpp"

namespace sieveball::kernels {

namespace {

void nibble_max_scalar(uint8_t* dst, const uint8_t* src, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const uint8_t a = dst[i], b = src[i];
    const uint8_t lo = (a & 0x0F) > (b & 0x0F) ? (a & 0x0F) : (b & 0x0F);
    const uint8_t hi = (a & 0xF0) > (b & 0xF0) ? (a & 0xF0) : (b & 0xF0);
    dst[i] = hi | lo;
  }
}

HarmonicSum harmonic_scalar(const uint8_t* regs, size_t n) {
  HarmonicSum out;
  for (size_t i = 0; i < n; ++i) {
    const uint8_t lo = regs[i] & 0x0F;
    const uint8_t hi = regs[i] >> 4;
    out.numerator += (uint64_t{1} << (15 - lo)) + (uint64_t{1} << (15 - hi));
    out.zeros += (lo == 0) + (hi == 0);
  }
  return out;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops k{&nibble_max_scalar, &harmonic_scalar, "scalar"};
  return k;
}

}  // namespace sieveball::kernels
