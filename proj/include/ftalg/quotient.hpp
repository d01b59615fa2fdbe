#pragma once

#include <array>

#include "ftalg/analysis.hpp"
#include "ftalg/expr.hpp"
#include "ftalg/order.hpp"
#include "ftalg/tolerance.hpp"

namespace ftalg {

// A fault-tolerance equivalence class, identified by its phi label: two
// systems are in the same class iff their phi values under the metric agree.
// Worst labels range over {-1, 0, 1, ..., +inf}; Best over {-inf, 0, 1, ...}.
struct FtClass {
  Metric metric;
  Tolerance label;

  friend bool operator==(const FtClass&, const FtClass&) = default;
};

FtClass class_of(const ExprPtr& e, Metric m);

// ⊞: min under Worst, + under Best. Identity is the always-up class
// (+inf under Worst). Throws std::invalid_argument on a metric mismatch.
FtClass class_sum(FtClass a, FtClass b);

// ⊠: j + k + 1, Worst metric only — the product is not a congruence for
// best-case equivalence, and the error says so. Identity is the class of
// One (label -1); the always-up class +inf annihilates.
FtClass class_prod(FtClass a, FtClass b);

// Canonical witness: Fin(k >= 0) -> X^(k+1); Worst +inf -> Zero;
// Worst Fin(-1) -> One; Best -inf -> One. class_of(representative(c)) == c.
ExprPtr representative(FtClass c);

// Class-level order ≲: label(a) >= label(b). A genuine partial order on
// classes (antisymmetric), unlike ⪯ on expressions.
bool class_leq(FtClass a, FtClass b);

// holds = (A1 ~ B1 and A2 ~ B2) implies (A1 op A2 ~ B1 op B2) under the
// metric, with ~ comparing phi values. `op` must be Sum or Product. The quad
// order is (A1, A2, B1, B2).
LawReport check_congruence(Metric m, ExprKind op, const std::array<ExprPtr, 4>& quad);

}  // namespace ftalg
