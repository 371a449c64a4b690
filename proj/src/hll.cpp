#include "sieveball/hll.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sieveball {

HllParams::HllParams(unsigned precision) : p(precision) {
  if (p < 4 || p > 16) throw std::invalid_argument("hll: precision must be in [4, 16]");
  m = uint32_t{1} << p;
  row_bytes = m / 2;
  switch (m) {
    case 16: alpha_m = 0.673; break;
    case 32: alpha_m = 0.697; break;
    case 64: alpha_m = 0.709; break;
    default: alpha_m = 0.7213 / (1.0 + 1.079 / m); break;
  }
}

void hll_insert(HllRegisterPlane& plane, uint64_t counter, uint64_t element,
                const HllParams& params) {
  const uint64_t h = splitmix64(element);
  const uint32_t index = static_cast<uint32_t>(h >> (64 - params.p));
  const uint64_t w = h << params.p;
  const unsigned lz = w == 0 ? (64 - params.p) : static_cast<unsigned>(std::countl_zero(w));
  const uint8_t rho = static_cast<uint8_t>(std::min(lz + 1, 15u));
  if (plane.get_register(counter, index) < rho) plane.set_register(counter, index, rho);
}

double hll_estimate_from_sum(const kernels::HarmonicSum& sum, const HllParams& params) {
  const double m = static_cast<double>(params.m);
  const double harmonic = static_cast<double>(sum.numerator) / 32768.0;
  const double raw = params.alpha_m * m * m / harmonic;
  if (raw <= 2.5 * m && sum.zeros > 0) return m * std::log(m / static_cast<double>(sum.zeros));
  return raw;
}

double hll_estimate(const uint8_t* row, const HllParams& params) {
  return hll_estimate_from_sum(kernels::ops().harmonic_sum(row, params.row_bytes), params);
}

}  // namespace sieveball
