#include "sieveball/kernels.hpp"

namespace sieveball::kernels {

#if defined(SIEVEBALL_HAVE_AVX2_TU)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(SIEVEBALL_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
  return nullptr;
}

const Ops& ops() {
  static const Ops& selected = []() -> const Ops& {
    if (const Ops* v = avx2_ops()) return *v;
    return scalar_ops();
  }();
  return selected;
}

}  // namespace sieveball::kernels
