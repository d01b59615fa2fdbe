#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ftalg/oracle.hpp"
#include "helpers.hpp"

using namespace ftalg;
using namespace ftalg::testing;

TEST_CASE("fail program compiles and evaluates like the tree walk") {
  GenConfig cfg = small_config(61, true);
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 150; ++i, ++checked) {
    ExprPtr e = gen_expr_bounded(cfg, i, 12);
    GroundedSystem g = ground(e);
    FailProgram prog = compile_fail_program(g);
    CHECK(prog.var_count == g.component_count());
    const std::uint64_t total = 1ull << g.component_count();
    for (std::uint64_t s = 0; s < total; ++s)
      CHECK(eval_fail(prog, s) == fails(g, FailureSet{s}));
  }
}

TEST_CASE("kernel registry") {
  auto kernels = kernels::available_kernels();
  REQUIRE(kernels.size() >= 2);
  CHECK(kernels[0].name == "scalar");
  CHECK(kernels[1].name == "bitslice64");
  CHECK(kernels::find_kernel("scalar") != nullptr);
  CHECK(kernels::find_kernel("nope") == nullptr);
  CHECK(kernels::preferred_kernel().name == kernels.back().name);
  for (const auto& k : kernels)
    MESSAGE("kernel available: ", std::string(k.name));
}

TEST_CASE("all kernels produce bit-identical bitmaps") {
  GenConfig cfg = small_config(62, true);
  cfg.max_depth = 4;
  cfg.atom_pool = {"A", "B", "C", "D", "E", "F"};
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 120; ++i, ++checked) {
    // Sizes straddle the 64- and 256-lane block boundaries.
    ExprPtr e = gen_expr_bounded(cfg, i, 12);
    GroundedSystem g = ground(e);
    FailProgram prog = compile_fail_program(g);
    std::size_t n = g.component_count();
    std::uint64_t words = n <= 6 ? 1 : 1ull << (n - 6);

    std::vector<std::uint64_t> reference(words);
    kernels::eval_words_scalar(prog, 0, words, reference.data());
    for (const auto& k : kernels::available_kernels()) {
      std::vector<std::uint64_t> out(words);
      k.fn(prog, 0, words, out.data());
      if (out != reference)
        FAIL("kernel ", std::string(k.name), " diverges on ", format(e));
    }
  }
}

TEST_CASE("kernels agree on ranges not starting at word zero") {
  ExprPtr e = parse("(A+B+C)*(D+E+F)*(G+H+I)");  // 9 vars, 8 words
  FailProgram prog = compile_fail_program(ground(e));
  std::vector<std::uint64_t> reference(8);
  kernels::eval_words_scalar(prog, 0, 8, reference.data());
  for (const auto& k : kernels::available_kernels()) {
    std::vector<std::uint64_t> out(5);
    k.fn(prog, 3, 5, out.data());
    for (int i = 0; i < 5; ++i) CHECK(out[i] == reference[3 + i]);
  }
}

TEST_CASE("every kernel yields the same oracle values") {
  GenConfig cfg = small_config(63, true);
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 60; ++i, ++checked) {
    ExprPtr e = gen_expr_bounded(cfg, i, 11);
    GroundedSystem g = ground(e);
    OracleOptions base;
    base.kernel = kernels::find_kernel("scalar");
    Report expected = oracle_report(g, base);
    for (const auto& k : kernels::available_kernels()) {
      OracleOptions opts;
      opts.kernel = &k;
      Report got = oracle_report(g, opts);
      CHECK(got.phi_best == expected.phi_best);
      CHECK(got.phi_worst == expected.phi_worst);
    }
  }
}
