#include "ftalg/quotient.hpp"

#include <stdexcept>

#include "ftalg/parser.hpp"

namespace ftalg {

namespace {

void require_same_metric(FtClass a, FtClass b) {
  if (a.metric != b.metric)
    throw std::invalid_argument("class operands have different metrics");
}

}  // namespace

FtClass class_of(const ExprPtr& e, Metric m) { return {m, phi(*e, m)}; }

FtClass class_sum(FtClass a, FtClass b) {
  require_same_metric(a, b);
  if (a.metric == Metric::Worst) return {a.metric, tol_min(a.label, b.label)};
  return {a.metric, tol_add(a.label, b.label)};
}

FtClass class_prod(FtClass a, FtClass b) {
  require_same_metric(a, b);
  if (a.metric != Metric::Worst)
    throw std::invalid_argument(
        "class_prod is defined for the worst metric only: the direct product "
        "is not a congruence for best-case equivalence");
  if (a.label.is_pos_inf() || b.label.is_pos_inf())
    return {a.metric, Tolerance::pos_inf()};
  return {a.metric, Tolerance::fin(a.label.value() + b.label.value() + 1)};
}

ExprPtr representative(FtClass c) {
  if (c.label.is_finite() && c.label.value() >= 0)
    return n_fold_product(atom("X"), static_cast<std::size_t>(c.label.value()) + 1);
  if (c.metric == Metric::Worst) {
    if (c.label.is_pos_inf()) return zero();
    if (c.label == Tolerance::fin(-1)) return one();
  } else if (c.label.is_neg_inf()) {
    return one();
  }
  throw std::invalid_argument("no representative: label " + c.label.str() +
                              " is outside the " +
                              std::string(metric_name(c.metric)) + " range");
}

bool class_leq(FtClass a, FtClass b) {
  require_same_metric(a, b);
  return a.label >= b.label;
}

LawReport check_congruence(Metric m, ExprKind op, const std::array<ExprPtr, 4>& quad) {
  if (op != ExprKind::Sum && op != ExprKind::Product)
    throw std::invalid_argument("check_congruence: op must be Sum or Product");
  const auto &a1 = quad[0], &a2 = quad[1], &b1 = quad[2], &b2 = quad[3];
  auto phi_eq = [&](const ExprPtr& l, const ExprPtr& r) {
    Tolerance pl = phi(*l, m), pr = phi(*r, m);
    return LawCheck{format(l) + " ~ " + format(r), pl, pr, pl == pr};
  };
  auto combine = [&](const ExprPtr& l, const ExprPtr& r) {
    return op == ExprKind::Sum ? sum({l, r}) : product({l, r});
  };
  LawReport report;
  report.law_id = op == ExprKind::Sum ? "congruence_sum" : "congruence_prod";
  report.instance.exprs = {a1, a2, b1, b2};
  Implication imp;
  imp.hypotheses = {phi_eq(a1, b1), phi_eq(a2, b2)};
  imp.conclusions = {phi_eq(combine(a1, a2), combine(b1, b2))};
  report.holds = imp.holds();
  report.detail = {std::move(imp)};
  return report;
}

}  // namespace ftalg
