#include <memory>

#include "ftalg/kernels.hpp"

namespace ftalg::kernels {

// 64 subsets per step: each lane of a word is one subset of the 64-aligned
// block, so Sum/Product collapse to OR/AND on whole words. Variables 0..5
// follow the fixed lane patterns; higher variables are constant per block.
void eval_words_bitslice64(const FailProgram& p, std::uint64_t first_word,
                           std::uint64_t word_count, std::uint64_t* out) {
  auto stack = std::make_unique<std::uint64_t[]>(p.max_stack);
  for (std::uint64_t w = 0; w < word_count; ++w) {
    const std::uint64_t base = (first_word + w) * 64;
    std::size_t top = 0;
    for (const auto& op : p.ops) {
      switch (op.code) {
        case FailProgram::OpCode::Var:
          stack[top++] = op.arg < 6 ? detail::kVarPattern[op.arg]
                                    : ((base >> op.arg) & 1u ? ~0ull : 0ull);
          break;
        case FailProgram::OpCode::ConstFail:
          stack[top++] = ~0ull;
          break;
        case FailProgram::OpCode::ConstOk:
          stack[top++] = 0ull;
          break;
        case FailProgram::OpCode::AnyOf: {
          std::uint64_t acc = 0;
          for (std::uint32_t i = 0; i < op.arg; ++i) acc |= stack[--top];
          stack[top++] = acc;
          break;
        }
        case FailProgram::OpCode::AllOf: {
          std::uint64_t acc = ~0ull;
          for (std::uint32_t i = 0; i < op.arg; ++i) acc &= stack[--top];
          stack[top++] = acc;
          break;
        }
      }
    }
    out[w] = stack[0];
  }
}

}  // namespace ftalg::kernels
