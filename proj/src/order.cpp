#include "ftalg/order.hpp"

#include <array>
#include <stdexcept>

#include "ftalg/parser.hpp"

namespace ftalg {

std::string_view metric_name(Metric m) {
  return m == Metric::Worst ? "worst" : "best";
}

Tolerance phi(const Expr& e, Metric m) {
  return m == Metric::Worst ? phi_worst(e) : phi_best(e);
}

bool leq(const ExprPtr& a, const ExprPtr& b, Metric m) {
  return phi(*a, m) >= phi(*b, m);
}

bool Implication::holds() const {
  for (const auto& h : hypotheses)
    if (!h.satisfied) return true;  // vacuous
  for (const auto& c : conclusions)
    if (!c.satisfied) return false;
  return true;
}

namespace {

LawCheck chk_leq(const ExprPtr& l, const ExprPtr& r, Metric m) {
  Tolerance pl = phi(*l, m), pr = phi(*r, m);
  return {format(l) + " ⪯ " + format(r), pl, pr, pl >= pr};
}

LawCheck chk_int_le(std::int64_t m, std::int64_t n) {
  return {std::to_string(m) + " <= " + std::to_string(n), Tolerance::fin(m),
          Tolerance::fin(n), m <= n};
}

LawCheck chk_int_lt(std::int64_t m, std::int64_t n) {
  return {std::to_string(m) + " < " + std::to_string(n), Tolerance::fin(m),
          Tolerance::fin(n), m < n};
}

ExprPtr sum2(const ExprPtr& a, const ExprPtr& b) { return sum({a, b}); }
ExprPtr prod2(const ExprPtr& a, const ExprPtr& b) { return product({a, b}); }

using EvalFn = std::vector<Implication> (*)(const LawInstance&, Metric);

struct LawDef {
  std::string_view id;
  int expr_arity;   // -1 = variable (even count of pair laws)
  int param_arity;
  EvalFn eval;
};

std::vector<Implication> eval_monotony_add(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1], &C = in.exprs[2];
  return {{{chk_leq(A, B, m)}, {chk_leq(sum2(A, C), sum2(B, C), m)}}};
}

std::vector<Implication> eval_monotony_mul(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1], &C = in.exprs[2];
  return {{{chk_leq(A, B, m)}, {chk_leq(prod2(A, C), prod2(B, C), m)}}};
}

std::vector<Implication> eval_lemma1_sum(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1];
  return {{{}, {chk_leq(A, sum2(A, B), m)}}};
}

std::vector<Implication> eval_lemma1_prod(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1];
  return {{{}, {chk_leq(prod2(A, B), A, m)}}};
}

std::vector<Implication> eval_lemma2_sum(const LawInstance& in, Metric m) {
  const auto& A = in.exprs[0];
  auto n = static_cast<std::size_t>(in.params[0]);
  return {{{}, {chk_leq(A, n_fold_sum(A, n), m)}}};
}

std::vector<Implication> eval_lemma2_prod(const LawInstance& in, Metric m) {
  const auto& A = in.exprs[0];
  auto n = static_cast<std::size_t>(in.params[0]);
  return {{{}, {chk_leq(n_fold_product(A, n), A, m)}}};
}

std::vector<Implication> eval_corollary1(const LawInstance& in, Metric m) {
  const auto& A = in.exprs[0];
  auto pm = static_cast<std::size_t>(in.params[0]);
  auto pn = static_cast<std::size_t>(in.params[1]);
  return {{{chk_int_lt(in.params[0], in.params[1])},
           {chk_leq(n_fold_sum(A, pm), n_fold_sum(A, pn), m),
            chk_leq(n_fold_product(A, pn), n_fold_product(A, pm), m)}}};
}

std::vector<Implication> eval_sum_consistency(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1], &C = in.exprs[2];
  return {{{chk_leq(sum2(A, B), C, m)}, {chk_leq(A, C, m), chk_leq(B, C, m)}}};
}

std::vector<Implication> eval_prod_consistency(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1], &C = in.exprs[2];
  return {{{chk_leq(A, prod2(B, C), m)}, {chk_leq(A, B, m), chk_leq(A, C, m)}}};
}

std::vector<Implication> eval_gen_consistency(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1];
  auto n = static_cast<std::size_t>(in.params[0]);
  return {{{chk_leq(n_fold_sum(A, n), B, m)}, {chk_leq(A, B, m)}},
          {{chk_leq(A, n_fold_product(B, n), m)}, {chk_leq(A, B, m)}}};
}

std::vector<Implication> eval_compose_monotone(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1], &C = in.exprs[2], &D = in.exprs[3];
  return {{{chk_leq(A, B, m), chk_leq(C, D, m)},
           {chk_leq(sum2(A, C), sum2(B, D), m),
            chk_leq(prod2(A, C), prod2(B, D), m)}}};
}

std::vector<Implication> eval_compose_monotone_n(const LawInstance& in, Metric m) {
  std::size_t k = in.exprs.size() / 2;
  std::vector<ExprPtr> as(in.exprs.begin(), in.exprs.begin() + k);
  std::vector<ExprPtr> bs(in.exprs.begin() + k, in.exprs.end());
  Implication imp;
  for (std::size_t i = 0; i < k; ++i)
    imp.hypotheses.push_back(chk_leq(as[i], bs[i], m));
  auto fold = [](std::vector<ExprPtr> v, bool as_sum) {
    return v.size() == 1 ? v.front() : (as_sum ? sum(std::move(v)) : product(std::move(v)));
  };
  imp.conclusions.push_back(chk_leq(fold(as, true), fold(bs, true), m));
  imp.conclusions.push_back(chk_leq(fold(as, false), fold(bs, false), m));
  return {std::move(imp)};
}

std::vector<Implication> eval_power_corollary2(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1];
  auto n = static_cast<std::size_t>(in.params[0]);
  return {{{chk_leq(A, B, m)},
           {chk_leq(n_fold_sum(A, n), n_fold_sum(B, n), m),
            chk_leq(n_fold_product(A, n), n_fold_product(B, n), m)}}};
}

std::vector<Implication> eval_mixed_theorem(const LawInstance& in, Metric m) {
  const auto &A = in.exprs[0], &B = in.exprs[1];
  auto pm = static_cast<std::size_t>(in.params[0]);
  auto pn = static_cast<std::size_t>(in.params[1]);
  return {{{chk_leq(A, B, m), chk_int_le(in.params[0], in.params[1])},
           {chk_leq(n_fold_sum(A, pm), n_fold_sum(B, pn), m),
            chk_leq(n_fold_product(A, pn), n_fold_product(B, pm), m)}}};
}

std::vector<Implication> eval_final_corollary(const LawInstance& in, Metric m) {
  const auto& A = in.exprs[0];
  auto pm = static_cast<std::size_t>(in.params[0]);
  auto pn = static_cast<std::size_t>(in.params[1]);
  ExprPtr lhs = n_fold_sum(n_fold_product(A, pn), pm);  // mA^n
  ExprPtr rhs = n_fold_sum(n_fold_product(A, pm), pn);  // nA^m
  return {{{chk_int_le(in.params[0], in.params[1])}, {chk_leq(lhs, rhs, m)}}};
}

constexpr std::array<LawDef, 17> kLaws{{
    {"monotony_add", 3, 0, eval_monotony_add},
    {"monotony_mul", 3, 0, eval_monotony_mul},
    {"lemma1_sum", 2, 0, eval_lemma1_sum},
    {"lemma1_prod", 2, 0, eval_lemma1_prod},
    {"lemma2_sum", 1, 1, eval_lemma2_sum},
    {"lemma2_prod", 1, 1, eval_lemma2_prod},
    {"corollary1", 1, 2, eval_corollary1},
    {"sum_consistency", 3, 0, eval_sum_consistency},
    {"prod_consistency", 3, 0, eval_prod_consistency},
    {"gen_consistency", 2, 1, eval_gen_consistency},
    {"compose_monotone", 4, 0, eval_compose_monotone},
    {"compose_monotone_n", -1, 0, eval_compose_monotone_n},
    {"power_corollary2", 2, 1, eval_power_corollary2},
    {"mixed_theorem", 2, 2, eval_mixed_theorem},
    {"final_corollary", 1, 2, eval_final_corollary},
    {"cone_positive", 2, 0, eval_lemma1_sum},
    {"cone_negative", 2, 0, eval_lemma1_prod},
}};

const LawDef& law_def(std::string_view id) {
  for (const auto& def : kLaws)
    if (def.id == id) return def;
  throw std::invalid_argument("unknown law_id: " + std::string(id));
}

}  // namespace

std::span<const std::string_view> law_catalog() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> v;
    for (const auto& def : kLaws) v.push_back(def.id);
    return v;
  }();
  return ids;
}

bool is_known_law(std::string_view law_id) {
  for (const auto& def : kLaws)
    if (def.id == law_id) return true;
  return false;
}

LawReport check_law(std::string_view law_id, const LawInstance& instance, Metric m) {
  const LawDef& def = law_def(law_id);
  if (def.expr_arity >= 0 &&
      instance.exprs.size() != static_cast<std::size_t>(def.expr_arity))
    throw std::invalid_argument("law " + std::string(law_id) + " expects " +
                                std::to_string(def.expr_arity) + " expressions");
  if (def.expr_arity < 0 &&
      (instance.exprs.size() < 2 || instance.exprs.size() % 2 != 0))
    throw std::invalid_argument("law " + std::string(law_id) +
                                " expects an even number of expressions");
  if (instance.params.size() != static_cast<std::size_t>(def.param_arity))
    throw std::invalid_argument("law " + std::string(law_id) + " expects " +
                                std::to_string(def.param_arity) + " parameters");
  for (auto p : instance.params)
    if (p < 1) throw std::invalid_argument("law parameters must be positive");

  LawReport report;
  report.law_id = std::string(law_id);
  report.instance = instance;
  report.detail = def.eval(instance, m);
  report.holds = true;
  for (const auto& imp : report.detail) report.holds &= imp.holds();
  return report;
}

LawInstance make_law_instance(std::string_view law_id, const GenConfig& cfg,
                              std::uint64_t index) {
  const LawDef& def = law_def(law_id);
  SplitMix64 rng(cfg.seed + 0x9E3779B97F4A7C15ull * (index + 1));
  LawInstance instance;
  std::size_t exprs = def.expr_arity >= 0
                          ? static_cast<std::size_t>(def.expr_arity)
                          : 2 * (1 + rng.below(3));
  for (std::size_t i = 0; i < exprs; ++i)
    instance.exprs.push_back(gen_expr(cfg, rng));
  // Integer parameters are drawn so the laws' side conditions hold.
  if (def.param_arity == 1) {
    instance.params.push_back(static_cast<std::int64_t>(1 + rng.below(4)));
  } else if (def.param_arity == 2) {
    std::int64_t m = static_cast<std::int64_t>(1 + rng.below(4));
    std::int64_t gap = law_id == "corollary1" ? 1 : 0;
    instance.params.push_back(m);
    instance.params.push_back(m + gap + static_cast<std::int64_t>(rng.below(3)));
  }
  return instance;
}

namespace {

std::optional<Counterexample> scan_law(std::string_view law_id, Metric m,
                                       const GenConfig& cfg, std::size_t instances,
                                       bool stop_at_first, std::size_t* violations) {
  std::optional<Counterexample> first;
  for (std::size_t i = 0; i < instances; ++i) {
    LawReport report = check_law(law_id, make_law_instance(law_id, cfg, i), m);
    if (!report.holds) {
      if (violations) ++*violations;
      if (!first) first = Counterexample{i, std::move(report)};
      if (stop_at_first) break;
    }
  }
  return first;
}

}  // namespace

std::optional<Counterexample> find_counterexample(std::string_view law_id, Metric m,
                                                  const SearchBudget& budget) {
  return scan_law(law_id, m, budget.config, budget.instances, true, nullptr);
}

LawRunSummary run_law(std::string_view law_id, Metric m, const GenConfig& cfg,
                      std::size_t instances) {
  LawRunSummary summary;
  summary.law_id = std::string(law_id);
  summary.instances = instances;
  summary.first = scan_law(law_id, m, cfg, instances, false, &summary.violations);
  return summary;
}

}  // namespace ftalg
