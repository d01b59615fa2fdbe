#include "ftalg/expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ftalg {

namespace {

void require_children(const std::vector<ExprPtr>& children, const char* what) {
  if (children.size() < 2)
    throw std::invalid_argument(std::string(what) + " needs at least 2 children");
  for (const auto& c : children)
    if (!c) throw std::invalid_argument(std::string(what) + " child is null");
}

}  // namespace

const std::string& Expr::atom_name() const {
  if (kind_ != ExprKind::Atom) throw std::logic_error("atom_name() on a non-atom");
  return name_;
}

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto tail = [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '_';
  };
  if (!alpha(name.front())) return false;
  for (char c : name.substr(1))
    if (!tail(c)) return false;
  return true;
}

ExprPtr atom(std::string name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return ExprPtr(new Expr(ExprKind::Atom, std::move(name), {}));
}

ExprPtr zero() {
  static const ExprPtr instance(new Expr(ExprKind::Zero, {}, {}));
  return instance;
}

ExprPtr one() {
  static const ExprPtr instance(new Expr(ExprKind::One, {}, {}));
  return instance;
}

ExprPtr sum(std::vector<ExprPtr> children) {
  require_children(children, "Sum");
  return ExprPtr(new Expr(ExprKind::Sum, {}, std::move(children)));
}

ExprPtr product(std::vector<ExprPtr> children) {
  require_children(children, "Product");
  return ExprPtr(new Expr(ExprKind::Product, {}, std::move(children)));
}

ExprPtr n_fold_sum(const ExprPtr& e, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n_fold_sum needs n >= 1");
  if (n == 1) return e;
  return sum(std::vector<ExprPtr>(n, e));
}

ExprPtr n_fold_product(const ExprPtr& e, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n_fold_product needs n >= 1");
  if (n == 1) return e;
  return product(std::vector<ExprPtr>(n, e));
}

int compare(const Expr& a, const Expr& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  if (a.kind() == ExprKind::Atom) return a.atom_name().compare(b.atom_name());
  if (a.is_leaf()) return 0;
  auto ca = a.children(), cb = b.children();
  std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(*ca[i], *cb[i]); c != 0) return c;
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

bool structurally_equal(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  return compare(*a, *b) == 0;
}

std::size_t component_count(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Atom: return 1;
    case ExprKind::Zero:
    case ExprKind::One: return 0;
    default: {
      std::size_t total = 0;
      for (const auto& c : e.children()) total += component_count(*c);
      return total;
    }
  }
}

ExprPtr ac_canonical(const ExprPtr& e) {
  if (e->is_leaf()) return e;
  std::vector<ExprPtr> flat;
  for (const auto& child : e->children()) {
    ExprPtr c = ac_canonical(child);
    if (c->kind() == e->kind()) {
      auto nested = c->children();
      flat.insert(flat.end(), nested.begin(), nested.end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const ExprPtr& a, const ExprPtr& b) { return compare(*a, *b) < 0; });
  return e->kind() == ExprKind::Sum ? sum(std::move(flat)) : product(std::move(flat));
}

bool ac_equal(const ExprPtr& a, const ExprPtr& b) {
  return structurally_equal(ac_canonical(a), ac_canonical(b));
}

namespace {

void collect_instances(const Expr& e, std::vector<std::string>& names) {
  switch (e.kind()) {
    case ExprKind::Atom: names.push_back(e.atom_name()); break;
    case ExprKind::Zero:
    case ExprKind::One: break;
    default:
      for (const auto& c : e.children()) collect_instances(*c, names);
  }
}

}  // namespace

GroundedSystem ground(ExprPtr e) {
  if (!e) throw std::invalid_argument("ground(null)");
  GroundedSystem g;
  g.expr = std::move(e);
  collect_instances(*g.expr, g.instance_names);
  return g;
}

}  // namespace ftalg
