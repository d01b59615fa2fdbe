#include "ftalg/kernels.hpp"

#include <vector>

namespace ftalg::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(FTALG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const std::vector<Kernel>& registry() {
  static const std::vector<Kernel> kernels = [] {
    std::vector<Kernel> v;
    v.push_back({"scalar", eval_words_scalar});
    v.push_back({"bitslice64", eval_words_bitslice64});
#if defined(FTALG_HAVE_NEON)
    v.push_back({"neon", eval_words_neon});
#endif
#if defined(FTALG_HAVE_AVX2)
    if (cpu_has_avx2()) v.push_back({"avx2", eval_words_avx2});
#endif
    return v;
  }();
  return kernels;
}

}  // namespace

std::span<const Kernel> available_kernels() { return registry(); }

const Kernel& preferred_kernel() { return registry().back(); }

const Kernel* find_kernel(std::string_view name) {
  for (const auto& k : registry())
    if (k.name == name) return &k;
  return nullptr;
}

}  // namespace ftalg::kernels
