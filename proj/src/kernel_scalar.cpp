#include "ftalg/kernels.hpp"

namespace ftalg::kernels {

// Reference kernel: one subset at a time.
void eval_words_scalar(const FailProgram& p, std::uint64_t first_word,
                       std::uint64_t word_count, std::uint64_t* out) {
  for (std::uint64_t w = 0; w < word_count; ++w) {
    const std::uint64_t base = (first_word + w) * 64;
    std::uint64_t bits = 0;
    for (unsigned j = 0; j < 64; ++j)
      if (eval_fail(p, base + j)) bits |= 1ull << j;
    out[w] = bits;
  }
}

}  // namespace ftalg::kernels
