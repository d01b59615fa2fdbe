#include "ftalg/normalize.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ftalg {

ExprPtr simplify_identities(const ExprPtr& e) {
  if (e->is_leaf()) return e;
  const bool is_sum = e->kind() == ExprKind::Sum;
  // Innermost first, so a child collapsing to an identity is seen here.
  const ExprKind absorb = is_sum ? ExprKind::One : ExprKind::Zero;
  const ExprKind drop = is_sum ? ExprKind::Zero : ExprKind::One;
  std::vector<ExprPtr> kept;
  for (const auto& child : e->children()) {
    ExprPtr c = simplify_identities(child);
    if (c->kind() == absorb) return is_sum ? one() : zero();
    if (c->kind() == drop) continue;
    kept.push_back(std::move(c));
  }
  if (kept.empty()) return is_sum ? zero() : one();
  if (kept.size() == 1) return kept.front();
  return is_sum ? sum(std::move(kept)) : product(std::move(kept));
}

namespace {

// Distribution can square the term count at every Product of Sums; cap it so
// a hostile input fails cleanly instead of exhausting memory.
constexpr std::size_t kSopTermLimit = 1u << 20;

using Monomial = std::vector<ExprPtr>;  // atoms of one product term

// `e` is identity-free here (simplify_identities ran first).
std::vector<Monomial> distribute(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Atom:
      return {{e}};
    case ExprKind::Sum: {
      std::vector<Monomial> terms;
      for (const auto& c : e->children()) {
        auto sub = distribute(c);
        if (terms.size() + sub.size() > kSopTermLimit)
          throw std::length_error("sum-of-products expansion exceeds term budget");
        terms.insert(terms.end(), std::make_move_iterator(sub.begin()),
                     std::make_move_iterator(sub.end()));
      }
      return terms;
    }
    case ExprKind::Product: {
      std::vector<Monomial> acc{{}};
      for (const auto& c : e->children()) {
        auto sub = distribute(c);
        if (acc.size() * sub.size() > kSopTermLimit)
          throw std::length_error("sum-of-products expansion exceeds term budget");
        std::vector<Monomial> next;
        next.reserve(acc.size() * sub.size());
        for (const auto& left : acc)
          for (const auto& right : sub) {
            Monomial m = left;
            m.insert(m.end(), right.begin(), right.end());
            next.push_back(std::move(m));
          }
        acc = std::move(next);
      }
      return acc;
    }
    default:
      throw std::logic_error("identity leaf survived simplification");
  }
}

}  // namespace

ExprPtr to_sop(const ExprPtr& e) {
  ExprPtr s = simplify_identities(e);
  if (s->is_leaf()) return s;
  std::vector<Monomial> monomials = distribute(s);
  std::vector<ExprPtr> terms;
  terms.reserve(monomials.size());
  for (auto& m : monomials)
    terms.push_back(m.size() == 1 ? m.front() : product(std::move(m)));
  ExprPtr flat = terms.size() == 1 ? terms.front() : sum(std::move(terms));
  return ac_canonical(flat);
}

bool iso_equal(const ExprPtr& a, const ExprPtr& b) {
  return structurally_equal(to_sop(a), to_sop(b));
}

}  // namespace ftalg
