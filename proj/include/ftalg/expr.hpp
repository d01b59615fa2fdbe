#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ftalg {

// Declaration order doubles as the canonical child-sort rank:
// Zero < One < Atom < Product < Sum.
enum class ExprKind : std::uint8_t { Zero, One, Atom, Product, Sum };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable system-composition tree. Sum is series composition (the system
// fails if any child fails), Product is parallel composition (the system
// fails only if all children fail). Zero is the always-up system, One the
// always-down one. Composite nodes carry at least two children; repeated
// atom names denote distinct physical components.
class Expr {
 public:
  ExprKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ <= ExprKind::Atom; }

  // Atom nodes only; throws std::logic_error otherwise.
  const std::string& atom_name() const;

  // Empty for leaves.
  std::span<const ExprPtr> children() const { return children_; }

 private:
  Expr(ExprKind kind, std::string name, std::vector<ExprPtr> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  friend ExprPtr atom(std::string name);
  friend ExprPtr zero();
  friend ExprPtr one();
  friend ExprPtr sum(std::vector<ExprPtr> children);
  friend ExprPtr product(std::vector<ExprPtr> children);

  ExprKind kind_;
  std::string name_;
  std::vector<ExprPtr> children_;
};

// [A-Za-z][A-Za-z0-9_]*; the literals `0` and `1` are not names.
bool valid_atom_name(std::string_view name);

ExprPtr atom(std::string name);  // throws std::invalid_argument on a bad name
ExprPtr zero();
ExprPtr one();
// Composite builders; throw std::invalid_argument on < 2 or null children.
ExprPtr sum(std::vector<ExprPtr> children);
ExprPtr product(std::vector<ExprPtr> children);

// nA and A^n; n >= 1, with the 1-fold case collapsing to `e` itself.
ExprPtr n_fold_sum(const ExprPtr& e, std::size_t n);
ExprPtr n_fold_product(const ExprPtr& e, std::size_t n);

// Total order on trees: kind rank first, atoms by name, composites
// lexicographically over children. Returns <0, 0, >0.
int compare(const Expr& a, const Expr& b);

bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// Number of atom occurrences (identity leaves contribute nothing).
std::size_t component_count(const Expr& e);
inline std::size_t component_count(const ExprPtr& e) { return component_count(*e); }

// Flattens Sum-under-Sum and Product-under-Product, then sorts children by
// the total order above. Idempotent; preserves the atom-occurrence multiset
// and the failure semantics.
ExprPtr ac_canonical(const ExprPtr& e);

// Equality modulo associativity and commutativity (does not distribute).
bool ac_equal(const ExprPtr& a, const ExprPtr& b);

// An expression whose atom occurrences carry unique instance ids 0..N-1 in
// depth-first order; the bridge to failure-set semantics.
struct GroundedSystem {
  ExprPtr expr;
  std::vector<std::string> instance_names;  // index == instance id

  std::size_t component_count() const { return instance_names.size(); }
};

GroundedSystem ground(ExprPtr e);

}  // namespace ftalg
