#pragma once

#include <cstddef>

#include "ftalg/expr.hpp"
#include "ftalg/tolerance.hpp"

namespace ftalg {

struct Report {
  std::size_t components = 0;
  Tolerance phi_best = Tolerance::fin(0);
  Tolerance phi_worst = Tolerance::fin(0);

  friend bool operator==(const Report&, const Report&) = default;
};

// Worst-case fault tolerance: one less than the cardinality of the smallest
// failure set that brings the system down.
//   Atom -> 0, Zero -> +inf, One -> -1,
//   Sum -> min over children,
//   Product of n -> sum over children + (n - 1).
Tolerance phi_worst(const Expr& e);
inline Tolerance phi_worst(const ExprPtr& e) { return phi_worst(*e); }

// Best-case fault tolerance: the cardinality of the largest failure set the
// system survives.
//   Atom -> 0, Zero -> 0, One -> -inf,
//   Sum -> sum over children,
//   Product -> every component outside the child with the smallest
//   count-minus-best deficit, plus that child's own best value. A child with
//   best = -inf has infinite deficit; if all children do, the result is -inf.
Tolerance phi_best(const Expr& e);
inline Tolerance phi_best(const ExprPtr& e) { return phi_best(*e); }

Report analyze(const Expr& e);
inline Report analyze(const ExprPtr& e) { return analyze(*e); }

}  // namespace ftalg
