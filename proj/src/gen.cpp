#include "ftalg/gen.hpp"

#include <stdexcept>

namespace ftalg {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  SplitMix64 s(a + 0x9E3779B97F4A7C15ull * (b + 1));
  return s.next();
}

void validate(const GenConfig& cfg) {
  if (cfg.max_depth < 1) throw std::invalid_argument("GenConfig: max_depth must be >= 1");
  if (cfg.max_children < 2)
    throw std::invalid_argument("GenConfig: max_children must be >= 2");
  if (cfg.atom_pool.empty())
    throw std::invalid_argument("GenConfig: atom_pool must be nonempty");
}

ExprPtr leaf(const GenConfig& cfg, SplitMix64& rng) {
  if (cfg.allow_identities && rng.chance(1, 6))
    return rng.chance(1, 2) ? zero() : one();
  return atom(cfg.atom_pool[rng.below(cfg.atom_pool.size())]);
}

ExprPtr node(const GenConfig& cfg, SplitMix64& rng, std::uint32_t depth) {
  // Leaves get likelier with depth; the root is usually composite.
  bool make_leaf = depth >= cfg.max_depth ||
                   (depth == 1 ? rng.chance(1, 5) : rng.chance(2, 5));
  if (make_leaf) return leaf(cfg, rng);
  std::size_t arity = 2 + rng.below(cfg.max_children - 1);
  std::vector<ExprPtr> children;
  children.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i)
    children.push_back(node(cfg, rng, depth + 1));
  return rng.chance(1, 2) ? sum(std::move(children)) : product(std::move(children));
}

}  // namespace

ExprPtr gen_expr(const GenConfig& cfg, SplitMix64& rng) {
  validate(cfg);
  return node(cfg, rng, 1);
}

ExprPtr gen_expr(const GenConfig& cfg, std::uint64_t index) {
  SplitMix64 rng(mix(cfg.seed, index));
  return gen_expr(cfg, rng);
}

ExprPtr gen_expr_bounded(const GenConfig& cfg, std::uint64_t index,
                         std::size_t max_components) {
  for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
    SplitMix64 rng(mix(mix(cfg.seed, index), attempt));
    ExprPtr e = gen_expr(cfg, rng);
    if (component_count(e) <= max_components) return e;
  }
  throw std::runtime_error("gen_expr_bounded: config cannot satisfy the bound");
}

}  // namespace ftalg
