#include "ftalg/kernels.hpp"

#if defined(FTALG_HAVE_NEON)

#include <arm_neon.h>

#include <memory>

namespace ftalg::kernels {

namespace {

// Variable mask for a pair of words whose first absolute word index is
// `word0`. Variables 0..5 repeat the 64-lane pattern in every word; higher
// variables are constant per word, bit (var - 6) of the word index.
inline uint64x2_t var_mask(std::uint32_t var, std::uint64_t word0) {
  if (var < 6) return vdupq_n_u64(detail::kVarPattern[var]);
  const unsigned shift = var - 6;
  const std::uint64_t lanes[2] = {
      ((word0 >> shift) & 1u) ? ~0ull : 0ull,
      (((word0 + 1) >> shift) & 1u) ? ~0ull : 0ull,
  };
  return vld1q_u64(lanes);
}

}  // namespace

void eval_words_neon(const FailProgram& p, std::uint64_t first_word,
                     std::uint64_t word_count, std::uint64_t* out) {
  auto stack = std::make_unique<uint64x2_t[]>(p.max_stack);
  std::uint64_t w = 0;
  for (; w + 2 <= word_count; w += 2) {
    const std::uint64_t word0 = first_word + w;
    std::size_t top = 0;
    for (const auto& op : p.ops) {
      switch (op.code) {
        case FailProgram::OpCode::Var:
          stack[top++] = var_mask(op.arg, word0);
          break;
        case FailProgram::OpCode::ConstFail:
          stack[top++] = vdupq_n_u64(~0ull);
          break;
        case FailProgram::OpCode::ConstOk:
          stack[top++] = vdupq_n_u64(0);
          break;
        case FailProgram::OpCode::AnyOf: {
          uint64x2_t acc = vdupq_n_u64(0);
          for (std::uint32_t i = 0; i < op.arg; ++i)
            acc = vorrq_u64(acc, stack[--top]);
          stack[top++] = acc;
          break;
        }
        case FailProgram::OpCode::AllOf: {
          uint64x2_t acc = vdupq_n_u64(~0ull);
          for (std::uint32_t i = 0; i < op.arg; ++i)
            acc = vandq_u64(acc, stack[--top]);
          stack[top++] = acc;
          break;
        }
      }
    }
    vst1q_u64(out + w, stack[0]);
  }
  if (w < word_count)
    eval_words_bitslice64(p, first_word + w, word_count - w, out + w);
}

}  // namespace ftalg::kernels

#endif  // FTALG_HAVE_NEON
