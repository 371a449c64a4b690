#pragma once

#include <cstddef>
#include <cstdint>

// Hot inner loops of the HLL/HyperBall pipeline, provided as scalar reference
// kernels plus SIMD variants selected at runtime. All variants are bit-exact
// equivalents: integer arithmetic only, no reassociation of floating point.
namespace sieveball::kernels {

struct HarmonicSum {
  // sum over m registers of 2^(15 - reg), so that
  //   sum of 2^(-reg) == numerator / 32768.0   (exact, dyadic)
  uint64_t numerator = 0;
  // count of zero-valued registers
  uint32_t zeros = 0;

  bool operator==(const HarmonicSum&) const = default;
};

struct Ops {
  // dst[i] = nibble-wise max(dst[i], src[i]) over n bytes of packed 4-bit
  // registers (low nibble = even register). Byte-wise max would be wrong:
  // max(0x1F, 0xF1) must give 0xFF, not 0xF1.
  void (*nibble_max_inplace)(uint8_t* dst, const uint8_t* src, size_t n);
  // Harmonic accumulator over n bytes (2n packed registers).
  HarmonicSum (*harmonic_sum)(const uint8_t* regs, size_t n);
  const char* name;
};

const Ops& scalar_ops();

// Best variant the running CPU supports. Never returns null members.
const Ops& ops();

// Non-null iff the binary carries an AVX2 TU and the CPU supports it.
const Ops* avx2_ops();

}  // namespace sieveball::kernels
