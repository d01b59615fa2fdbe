#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ftalg/oracle.hpp"
#include "ftalg/order.hpp"
#include "helpers.hpp"

using namespace ftalg;
using namespace ftalg::testing;

TEST_CASE("leq boundary and power examples") {
  CHECK(leq(zero(), A(), Metric::Worst));
  CHECK(leq(A(), one(), Metric::Worst));
  CHECK(leq(A(), parse("2A"), Metric::Worst));
  CHECK(leq(parse("A^2"), A(), Metric::Worst));
  CHECK_FALSE(leq(A(), parse("A^2"), Metric::Worst));
  GenConfig cfg = small_config(71, true);
  for_each_generated(cfg, 200, [&](const ExprPtr& e, std::size_t) {
    CHECK(leq(zero(), e, Metric::Worst));
    CHECK(leq(e, one(), Metric::Worst));
  });
}

TEST_CASE("leq under Worst is a total preorder") {
  GenConfig cfg = small_config(72, true);
  std::vector<ExprPtr> pool;
  for_each_generated(cfg, 150, [&](const ExprPtr& e, std::size_t) { pool.push_back(e); });
  for (std::size_t i = 0; i + 2 < pool.size(); i += 3) {
    const ExprPtr &a = pool[i], &b = pool[i + 1], &c = pool[i + 2];
    CHECK(leq(a, a, Metric::Worst));
    CHECK((leq(a, b, Metric::Worst) || leq(b, a, Metric::Worst)));
    if (leq(a, b, Metric::Worst) && leq(b, c, Metric::Worst))
      CHECK(leq(a, c, Metric::Worst));
  }
}

TEST_CASE("check_law validates ids and arities") {
  CHECK_THROWS_AS(check_law("nonsense", {{A()}, {}}, Metric::Worst),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_law("monotony_add", {{A()}, {}}, Metric::Worst),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_law("lemma2_sum", {{A()}, {0}}, Metric::Worst),
                  std::invalid_argument);
  CHECK(is_known_law("monotony_mul"));
  CHECK_FALSE(is_known_law("monotony"));
  CHECK(law_catalog().size() == 17);
}

TEST_CASE("cataloged laws hold universally under Worst") {
  GenConfig cfg = small_config(73, true);
  for (auto id : law_catalog()) {
    LawRunSummary summary = run_law(id, Metric::Worst, cfg, 700);
    if (summary.violations != 0)
      FAIL("law ", std::string(id), " violated under Worst at index ",
           summary.first->index);
  }
}

TEST_CASE("spec example: final_corollary with m=2, n=3") {
  LawInstance instance{{A()}, {2, 3}};
  LawReport report = check_law("final_corollary", instance, Metric::Worst);
  CHECK(report.holds);
  REQUIRE(report.detail.size() == 1);
  REQUIRE(report.detail[0].conclusions.size() == 1);
  CHECK(report.detail[0].conclusions[0].left == fin(2));   // phi_worst(2A^3)
  CHECK(report.detail[0].conclusions[0].right == fin(1));  // phi_worst(3A^2)
}

TEST_CASE("spec example: best-metric multiplication monotony fails on X/2X/Y") {
  LawInstance instance{{X(), parse("2X"), Y()}, {}};
  LawReport report = check_law("monotony_mul", instance, Metric::Best);
  CHECK_FALSE(report.holds);
  const Implication& imp = report.detail[0];
  CHECK(imp.hypotheses[0].satisfied);       // phi_best(X) = phi_best(2X) = 0
  CHECK_FALSE(imp.conclusions[0].satisfied);
  CHECK(imp.conclusions[0].left == fin(1));   // phi_best(X*Y)
  CHECK(imp.conclusions[0].right == fin(2));  // phi_best(2X*Y)
  // All four values confirmed by the oracle.
  CHECK(oracle_phi_best(ground(X())) == fin(0));
  CHECK(oracle_phi_best(ground(parse("2X"))) == fin(0));
  CHECK(oracle_phi_best(ground(parse("X*Y"))) == fin(1));
  CHECK(oracle_phi_best(ground(parse("2X*Y"))) == fin(2));
  CHECK(check_law("monotony_mul", instance, Metric::Worst).holds);
}

TEST_CASE("counterexample search") {
  SearchBudget budget;
  budget.config = small_config(7, true);
  budget.instances = 10000;

  CHECK_FALSE(find_counterexample("monotony_mul", Metric::Worst, budget).has_value());
  CHECK_FALSE(find_counterexample("lemma1_sum", Metric::Worst, budget).has_value());

  auto cex = find_counterexample("monotony_mul", Metric::Best, budget);
  REQUIRE(cex.has_value());
  CHECK_FALSE(cex->report.holds);
  // Deterministic: the same seed finds the same instance.
  auto again = find_counterexample("monotony_mul", Metric::Best, budget);
  REQUIRE(again.has_value());
  CHECK(again->index == cex->index);
}

TEST_CASE("monotony_add holds under Best as well") {
  GenConfig cfg = small_config(74, true);
  LawRunSummary summary = run_law("monotony_add", Metric::Best, cfg, 2000);
  CHECK(summary.violations == 0);
}

TEST_CASE("law reports carry enough detail to recompute holds") {
  GenConfig cfg = small_config(75, true);
  for (auto id : law_catalog()) {
    for (std::uint64_t i = 0; i < 40; ++i) {
      LawReport report = check_law(id, make_law_instance(id, cfg, i), Metric::Worst);
      bool recomputed = true;
      for (const auto& imp : report.detail) recomputed &= imp.holds();
      CHECK(recomputed == report.holds);
    }
  }
}
