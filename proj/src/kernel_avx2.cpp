#include "ftalg/kernels.hpp"

#if defined(FTALG_HAVE_AVX2)

#include <immintrin.h>

#include <memory>

namespace ftalg::kernels {

namespace {

// Variable mask for a group of four words whose first absolute word index is
// `word0`. Variables 0..5 repeat the 64-lane pattern in every word; higher
// variables are constant per word, bit (var - 6) of the word index.
inline __m256i var_mask(std::uint32_t var, std::uint64_t word0) {
  if (var < 6) return _mm256_set1_epi64x(static_cast<long long>(detail::kVarPattern[var]));
  const unsigned shift = var - 6;
  auto lane = [&](std::uint64_t l) -> long long {
    return ((word0 + l) >> shift) & 1u ? -1 : 0;
  };
  return _mm256_setr_epi64x(lane(0), lane(1), lane(2), lane(3));
}

}  // namespace

void eval_words_avx2(const FailProgram& p, std::uint64_t first_word,
                     std::uint64_t word_count, std::uint64_t* out) {
  auto stack = std::make_unique<__m256i[]>(p.max_stack);
  std::uint64_t w = 0;
  for (; w + 4 <= word_count; w += 4) {
    const std::uint64_t word0 = first_word + w;
    std::size_t top = 0;
    for (const auto& op : p.ops) {
      switch (op.code) {
        case FailProgram::OpCode::Var:
          stack[top++] = var_mask(op.arg, word0);
          break;
        case FailProgram::OpCode::ConstFail:
          stack[top++] = _mm256_set1_epi64x(-1);
          break;
        case FailProgram::OpCode::ConstOk:
          stack[top++] = _mm256_setzero_si256();
          break;
        case FailProgram::OpCode::AnyOf: {
          __m256i acc = _mm256_setzero_si256();
          for (std::uint32_t i = 0; i < op.arg; ++i)
            acc = _mm256_or_si256(acc, stack[--top]);
          stack[top++] = acc;
          break;
        }
        case FailProgram::OpCode::AllOf: {
          __m256i acc = _mm256_set1_epi64x(-1);
          for (std::uint32_t i = 0; i < op.arg; ++i)
            acc = _mm256_and_si256(acc, stack[--top]);
          stack[top++] = acc;
          break;
        }
      }
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), stack[0]);
  }
  if (w < word_count)
    eval_words_bitslice64(p, first_word + w, word_count - w, out + w);
}

}  // namespace ftalg::kernels

#endif  // FTALG_HAVE_AVX2
