#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <string>

#include "ftalg/oracle.hpp"
#include "helpers.hpp"

using namespace ftalg;
using namespace ftalg::testing;

TEST_CASE("fails: series and parallel semantics") {
  GroundedSystem series = ground(parse("A + B"));
  CHECK(fails(series, FailureSet::of({0})));
  CHECK(fails(series, FailureSet::of({1})));
  CHECK_FALSE(fails(series, FailureSet{}));

  GroundedSystem parallel = ground(parse("A * B"));
  CHECK_FALSE(fails(parallel, FailureSet::of({0})));
  CHECK_FALSE(fails(parallel, FailureSet::of({1})));
  CHECK(fails(parallel, FailureSet::of({0, 1})));

  CHECK_FALSE(fails(ground(zero()), FailureSet{}));
  CHECK(fails(ground(one()), FailureSet{}));

  CHECK_THROWS_AS(fails(series, FailureSet::of({5})), std::invalid_argument);
}

TEST_CASE("oracle phi on the mA^n families") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      std::string text = std::to_string(m) + "A^" + std::to_string(n);
      GroundedSystem g = ground(parse(text));
      CHECK(oracle_phi_worst(g) == fin(n - 1));
      CHECK(oracle_phi_best(g) == fin(m * (n - 1)));
    }
}

TEST_CASE("oracle phi on boundary systems") {
  CHECK(oracle_phi_best(ground(one())) == Tolerance::neg_inf());
  CHECK(oracle_phi_worst(ground(one())) == fin(-1));
  CHECK(oracle_phi_worst(ground(zero())) == Tolerance::pos_inf());
  CHECK(oracle_phi_best(ground(zero())) == fin(0));
  CHECK(oracle_phi_best(ground(parse("X^2*(B+C)"))) == fin(3));
  CHECK(oracle_phi_worst(ground(parse("(P^3 + 3Q) * 5R^2"))) == fin(2));
  CHECK(oracle_phi_best(ground(parse("(P^3 + 3Q) * 5R^2"))) == fin(12));
}

TEST_CASE("enumeration cap") {
  GroundedSystem g = ground(parse("21A"));
  CHECK_THROWS_AS(oracle_phi_best(g), CapExceededError);
  try {
    oracle_phi_worst(g);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.components() == 21);
    CHECK(e.cap() == 20);
  }
  OracleOptions raised;
  raised.cap = 21;
  CHECK(oracle_phi_worst(g, raised) == fin(0));
}

TEST_CASE("minimal cut sets") {
  auto cuts = minimal_cut_sets(ground(parse("A + B")));
  REQUIRE(cuts.size() == 2);
  CHECK(cuts[0] == FailureSet::of({0}));
  CHECK(cuts[1] == FailureSet::of({1}));

  cuts = minimal_cut_sets(ground(parse("A * B")));
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0] == FailureSet::of({0, 1}));

  cuts = minimal_cut_sets(ground(parse("A*(B+C)")));
  REQUIRE(cuts.size() == 2);
  CHECK(cuts[0] == FailureSet::of({0, 1}));
  CHECK(cuts[1] == FailureSet::of({0, 2}));

  CHECK(minimal_cut_sets(ground(zero())).empty());
  // The always-down system fails on the empty set.
  auto one_cuts = minimal_cut_sets(ground(one()));
  REQUIRE(one_cuts.size() == 1);
  CHECK(one_cuts[0] == FailureSet{});
}

TEST_CASE("cut sets are sorted by cardinality then lexicographically") {
  // (A+B)*(C+D): cuts {A,C},{A,D},{B,C},{B,D}
  auto cuts = minimal_cut_sets(ground(parse("(A+B)*(C+D)")));
  REQUIRE(cuts.size() == 4);
  CHECK(cuts[0] == FailureSet::of({0, 2}));
  CHECK(cuts[1] == FailureSet::of({0, 3}));
  CHECK(cuts[2] == FailureSet::of({1, 2}));
  CHECK(cuts[3] == FailureSet::of({1, 3}));
}

TEST_CASE("monotonicity and boundary coherence on generated systems") {
  GenConfig cfg = small_config(51, true);
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 120; ++i, ++checked) {
    ExprPtr e = gen_expr_bounded(cfg, i, 10);
    GroundedSystem g = ground(e);
    std::size_t n = g.component_count();
    auto bitmap = fail_bitmap(g);
    auto failing = [&](std::uint64_t k) {
      return ((bitmap[k >> 6] >> (k & 63)) & 1u) != 0;
    };
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t s = 0; s < total; ++s)
      for (std::size_t b = 0; b < n; ++b)
        if (!(s >> b & 1) && failing(s)) CHECK(failing(s | (1ull << b)));

    Report rep = oracle_report(g);
    if (failing(total - 1) && !failing(0)) CHECK(rep.phi_worst <= rep.phi_best);
    if (rep.phi_worst.is_finite()) {
      std::int64_t w = rep.phi_worst.value();
      for (std::uint64_t s = 0; s < total; ++s)
        if (std::popcount(s) <= w) CHECK_FALSE(failing(s));
      bool some_fails = false;
      for (std::uint64_t s = 0; s < total && !some_fails; ++s)
        some_fails = std::popcount(s) == w + 1 && failing(s);
      CHECK(some_fails);
    }

    auto cuts = minimal_cut_sets(g);
    CHECK(cuts.empty() == rep.phi_worst.is_pos_inf());
    if (!cuts.empty())
      CHECK(fin(cuts.front().size() - 1) == rep.phi_worst);
  }
}

TEST_CASE("popcount-ordered reference agrees with the bitmap path") {
  GenConfig cfg = small_config(52, true);
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 200; ++i, ++checked) {
    ExprPtr e = gen_expr_bounded(cfg, i, 12);
    GroundedSystem g = ground(e);
    CHECK(oracle_ref::phi_worst(g) == oracle_phi_worst(g));
    CHECK(oracle_ref::phi_best(g) == oracle_phi_best(g));
  }
}

TEST_CASE("failure-set helpers") {
  FailureSet s = FailureSet::of({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.ids() == std::vector<std::uint32_t>{0, 2, 5});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.with(1).size() == 4);
  CHECK(s.without(2) == FailureSet::of({0, 5}));
  CHECK_THROWS_AS(FailureSet::of({64}), std::invalid_argument);
}
