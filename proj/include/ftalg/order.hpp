#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftalg/analysis.hpp"
#include "ftalg/expr.hpp"
#include "ftalg/gen.hpp"
#include "ftalg/tolerance.hpp"

namespace ftalg {

// Worst is the law-complete model: every cataloged law holds under it. Best
// is kept for exploration; several laws fail under it and the failures are
// themselves meaningful output.
enum class Metric { Worst, Best };

std::string_view metric_name(Metric m);
Tolerance phi(const Expr& e, Metric m);
inline Tolerance phi(const ExprPtr& e, Metric m) { return phi(*e, m); }

// The fault-tolerance preorder: a ⪯ b iff phi(a) >= phi(b) under the metric.
// Smaller means more fault-tolerant; Zero is the bottom and One the top
// under Worst.
bool leq(const ExprPtr& a, const ExprPtr& b, Metric m);

struct LawCheck {
  std::string text;  // e.g. "X ⪯ X + Y" with formatted operands
  Tolerance left = Tolerance::fin(0);
  Tolerance right = Tolerance::fin(0);
  bool satisfied = false;
};

struct Implication {
  std::vector<LawCheck> hypotheses;  // empty = unconditional
  std::vector<LawCheck> conclusions;

  bool holds() const;
};

struct LawInstance {
  std::vector<ExprPtr> exprs;
  std::vector<std::int64_t> params;
};

struct LawReport {
  std::string law_id;
  LawInstance instance;
  bool holds = true;
  std::vector<Implication> detail;
};

// Stable CLI-facing law identifiers.
std::span<const std::string_view> law_catalog();
bool is_known_law(std::string_view law_id);

// Evaluates one law on one instance; holds = hypotheses imply conclusions.
// Throws std::invalid_argument on an unknown id or an arity mismatch.
LawReport check_law(std::string_view law_id, const LawInstance& instance, Metric m);

// Deterministic instance stream for a law (expressions plus any integer
// parameters, generated so integer side conditions like m < n hold).
LawInstance make_law_instance(std::string_view law_id, const GenConfig& cfg,
                              std::uint64_t index);

struct SearchBudget {
  GenConfig config;
  std::size_t instances = 10000;
};

struct Counterexample {
  std::size_t index;
  LawReport report;
};

// First generated instance violating the law, or nullopt within budget.
std::optional<Counterexample> find_counterexample(std::string_view law_id, Metric m,
                                                  const SearchBudget& budget);

struct LawRunSummary {
  std::string law_id;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::optional<Counterexample> first;
};

LawRunSummary run_law(std::string_view law_id, Metric m, const GenConfig& cfg,
                      std::size_t instances);

}  // namespace ftalg
