#include "sieveball/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace sieveball::kernels {

namespace {

void nibble_max_avx2(uint8_t* dst, const uint8_t* src, size_t n) {
  const __m256i lo_mask = _mm256_set1_epi8(0x0F);
  const __m256i hi_mask = _mm256_set1_epi8(static_cast<char>(0xF0));
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i lo = _mm256_max_epu8(_mm256_and_si256(a, lo_mask), _mm256_and_si256(b, lo_mask));
    const __m256i hi = _mm256_max_epu8(_mm256_and_si256(a, hi_mask), _mm256_and_si256(b, hi_mask));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(lo, hi));
  }
  for (; i < n; ++i) {
    const uint8_t a = dst[i], b = src[i];
    const uint8_t lo = (a & 0x0F) > (b & 0x0F) ? (a & 0x0F) : (b & 0x0F);
    const uint8_t hi = (a & 0xF0) > (b & 0xF0) ? (a & 0xF0) : (b & 0xF0);
    dst[i] = hi | lo;
  }
}

// 2^(15-r) split into low/high bytes, indexed by register value via pshufb.
const __m256i kLutLo = _mm256_setr_epi8(
    0, 0, 0, 0, 0, 0, 0, 0, char(128), 64, 32, 16, 8, 4, 2, 1,
    0, 0, 0, 0, 0, 0, 0, 0, char(128), 64, 32, 16, 8, 4, 2, 1);
const __m256i kLutHi = _mm256_setr_epi8(
    char(128), 64, 32, 16, 8, 4, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0,
    char(128), 64, 32, 16, 8, 4, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0);

inline uint64_t hsum_epi64(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<uint64_t>(_mm_extract_epi64(s, 0)) +
         static_cast<uint64_t>(_mm_extract_epi64(s, 1));
}

HarmonicSum harmonic_avx2(const uint8_t* regs, size_t n) {
  const __m256i lo_mask = _mm256_set1_epi8(0x0F);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  __m256i acc_lo = zero, acc_hi = zero, acc_z = zero;
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(regs + i));
    const __m256i nib_even = _mm256_and_si256(x, lo_mask);
    const __m256i nib_odd = _mm256_and_si256(_mm256_srli_epi16(x, 4), lo_mask);
    acc_lo = _mm256_add_epi64(acc_lo, _mm256_sad_epu8(_mm256_shuffle_epi8(kLutLo, nib_even), zero));
    acc_lo = _mm256_add_epi64(acc_lo, _mm256_sad_epu8(_mm256_shuffle_epi8(kLutLo, nib_odd), zero));
    acc_hi = _mm256_add_epi64(acc_hi, _mm256_sad_epu8(_mm256_shuffle_epi8(kLutHi, nib_even), zero));
    acc_hi = _mm256_add_epi64(acc_hi, _mm256_sad_epu8(_mm256_shuffle_epi8(kLutHi, nib_odd), zero));
    const __m256i z_even = _mm256_and_si256(_mm256_cmpeq_epi8(nib_even, zero), one);
    const __m256i z_odd = _mm256_and_si256(_mm256_cmpeq_epi8(nib_odd, zero), one);
    acc_z = _mm256_add_epi64(acc_z, _mm256_sad_epu8(_mm256_add_epi8(z_even, z_odd), zero));
  }
  HarmonicSum out;
  out.numerator = hsum_epi64(acc_lo) + (hsum_epi64(acc_hi) << 8);
  out.zeros = static_cast<uint32_t>(hsum_epi64(acc_z));
  for (; i < n; ++i) {
    const uint8_t lo = regs[i] & 0x0F;
    const uint8_t hi = regs[i] >> 4;
    out.numerator += (uint64_t{1} << (15 - lo)) + (uint64_t{1} << (15 - hi));
    out.zeros += (lo == 0) + (hi == 0);
  }
  return out;
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops k{&nibble_max_avx2, &harmonic_avx2, "avx2"};
  return &k;
}

}  // namespace sieveball::kernels

#endif  // x86
