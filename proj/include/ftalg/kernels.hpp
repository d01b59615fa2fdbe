#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "ftalg/failprog.hpp"

namespace ftalg::kernels {

// A kernel fills 64-subset blocks of the failure bitmap:
//   bit j of out[w - first_word] = fails(subset 64*w + j)
// for w in [first_word, first_word + word_count). Lanes beyond 2^N replicate
// lower subsets (variable i of subset k only ever reads bit i of k), so
// callers simply ignore bits at and above 2^N.
using KernelFn = void (*)(const FailProgram& p, std::uint64_t first_word,
                          std::uint64_t word_count, std::uint64_t* out);

struct Kernel {
  std::string_view name;
  KernelFn fn;
};

// "scalar" and "bitslice64" are always present; "avx2" / "neon" appear when
// the CPU supports them. Ordered slowest to fastest.
std::span<const Kernel> available_kernels();

const Kernel& preferred_kernel();
const Kernel* find_kernel(std::string_view name);

void eval_words_scalar(const FailProgram& p, std::uint64_t first_word,
                       std::uint64_t word_count, std::uint64_t* out);
void eval_words_bitslice64(const FailProgram& p, std::uint64_t first_word,
                           std::uint64_t word_count, std::uint64_t* out);
#if defined(FTALG_HAVE_AVX2)
void eval_words_avx2(const FailProgram& p, std::uint64_t first_word,
                     std::uint64_t word_count, std::uint64_t* out);
#endif
#if defined(FTALG_HAVE_NEON)
void eval_words_neon(const FailProgram& p, std::uint64_t first_word,
                     std::uint64_t word_count, std::uint64_t* out);
#endif

namespace detail {

// Lane pattern of variable i < 6 within any 64-aligned block: bit j equals
// bit i of the lane index j. Variables >= 6 are constant across a word.
inline constexpr std::uint64_t kVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace detail

}  // namespace ftalg::kernels
