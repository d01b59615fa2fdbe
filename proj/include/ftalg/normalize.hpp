#pragma once

#include "ftalg/expr.hpp"

namespace ftalg {

// Exhaustively applies, innermost first: drop Zero from Sum children, drop
// One from Product children, Sum containing One -> One, Product containing
// Zero -> Zero, unary composites collapse to their child. The result contains
// Zero/One only if it *is* Zero or One.
ExprPtr simplify_identities(const ExprPtr& e);

// Canonical sum-of-products: identity simplification, full distribution of
// Product over Sum, then ac_canonical. The result is Zero, One, or a Sum of
// Products of Atoms (degenerate one-term and one-factor cases stay unwrapped).
// Preserves failure semantics and phi_worst; phi_best is not preserved in
// general because distribution duplicates atom occurrences. Throws
// std::length_error if the expansion exceeds an internal term budget.
ExprPtr to_sop(const ExprPtr& e);

// The paper-level isomorphism decision procedure: equal canonical SOP forms.
bool iso_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace ftalg
