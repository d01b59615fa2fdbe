#pragma once

#include <string>
#include <vector>

#include "ftalg/analysis.hpp"
#include "ftalg/expr.hpp"
#include "ftalg/gen.hpp"
#include "ftalg/parser.hpp"

namespace ftalg::testing {

inline ExprPtr A() { return atom("A"); }
inline ExprPtr B() { return atom("B"); }
inline ExprPtr C() { return atom("C"); }
inline ExprPtr X() { return atom("X"); }
inline ExprPtr Y() { return atom("Y"); }

inline Tolerance fin(std::int64_t k) { return Tolerance::fin(k); }

// Depth-3 default generator; allow_identities off unless a suite wants them.
inline GenConfig small_config(std::uint64_t seed, bool identities = false) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_depth = 3;
  cfg.max_children = 3;
  cfg.allow_identities = identities;
  return cfg;
}

template <typename Fn>
void for_each_generated(const GenConfig& cfg, std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(gen_expr(cfg, i), i);
}

}  // namespace ftalg::testing
