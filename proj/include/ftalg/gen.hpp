#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftalg/expr.hpp"

namespace ftalg {

// Deterministic across platforms, unlike the standard distributions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::uint32_t max_depth = 3;     // >= 1; depth 1 is a single leaf
  std::uint32_t max_children = 3;  // >= 2
  std::vector<std::string> atom_pool = {"A", "B", "C", "D"};
  bool allow_identities = false;
};

// A pure function of (config, index): the same pair always yields the same
// tree. Throws std::invalid_argument on an ill-formed config.
ExprPtr gen_expr(const GenConfig& cfg, std::uint64_t index);
ExprPtr gen_expr(const GenConfig& cfg, SplitMix64& rng);

// First deterministic variant of `index` with at most `max_components` atom
// occurrences.
ExprPtr gen_expr_bounded(const GenConfig& cfg, std::uint64_t index,
                         std::size_t max_components);

}  // namespace ftalg
