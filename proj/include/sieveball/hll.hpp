#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sieveball/kernels.hpp"

namespace sieveball {

// SplitMix64 finalizer: xor-shift 30, mul 0xBF58476D1CE4E5B9,
// xor-shift 27, mul 0x94D049BB133111EB, xor-shift 31.
inline uint64_t splitmix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

struct HllParams {
  explicit HllParams(unsigned precision);

  unsigned p;          // precision, in [4, 16]
  uint32_t m;          // 2^p registers
  double alpha_m;      // bias constant for the raw estimator
  uint32_t row_bytes;  // m / 2 packed bytes per counter
};

// N counters of m 4-bit registers, packed two per byte (low nibble holds the
// even register).
class HllRegisterPlane {
 public:
  HllRegisterPlane(uint64_t node_count, const HllParams& params)
      : node_count_(node_count),
        row_bytes_(params.row_bytes),
        bytes_(node_count * params.row_bytes, 0) {}

  uint64_t node_count() const { return node_count_; }
  uint32_t row_bytes() const { return row_bytes_; }

  uint8_t* row(uint64_t v) { return bytes_.data() + v * row_bytes_; }
  const uint8_t* row(uint64_t v) const { return bytes_.data() + v * row_bytes_; }
  std::span<const uint8_t> row_span(uint64_t v) const { return {row(v), row_bytes_}; }

  std::span<const uint8_t> bytes() const { return bytes_; }
  void clear() { std::fill(bytes_.begin(), bytes_.end(), uint8_t{0}); }

  uint8_t get_register(uint64_t v, uint32_t j) const {
    const uint8_t b = row(v)[j >> 1];
    return (j & 1) ? (b >> 4) : (b & 0x0F);
  }
  void set_register(uint64_t v, uint32_t j, uint8_t value) {
    uint8_t& b = bytes_[v * row_bytes_ + (j >> 1)];
    if (j & 1)
      b = static_cast<uint8_t>((b & 0x0F) | (value << 4));
    else
      b = static_cast<uint8_t>((b & 0xF0) | (value & 0x0F));
  }

 private:
  uint64_t node_count_;
  uint32_t row_bytes_;
  std::vector<uint8_t> bytes_;
};

// register index = top p bits of splitmix64(element); rho = 1 + leading
// zeros of the remaining 64-p bits, saturating at 15 (4-bit pack).
void hll_insert(HllRegisterPlane& plane, uint64_t counter, uint64_t element,
                const HllParams& params);

// dst[j] = max(dst[j], src[j]) register-wise.
inline void hll_union_into(uint8_t* dst, const uint8_t* src, uint32_t row_bytes) {
  kernels::ops().nibble_max_inplace(dst, src, row_bytes);
}

// Raw alpha_m * m^2 / sum(2^-reg) estimate with small-range linear counting
// (raw <= 2.5 m and zero registers present -> m * ln(m / zeros)).
double hll_estimate(const uint8_t* row, const HllParams& params);
double hll_estimate_from_sum(const kernels::HarmonicSum& sum, const HllParams& params);

}  // namespace sieveball
