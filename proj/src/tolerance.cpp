#include "ftalg/tolerance.hpp"

#include <ostream>
#include <stdexcept>

namespace ftalg {

std::int64_t Tolerance::value() const {
  if (!is_finite()) throw std::domain_error("Tolerance::value() on " + str());
  return value_;
}

std::string Tolerance::str() const {
  switch (rank_) {
    case Rank::NegInf: return "-inf";
    case Rank::PosInf: return "+inf";
    case Rank::Finite: return std::to_string(value_);
  }
  return {};
}

Tolerance tol_add(Tolerance a, Tolerance b) {
  if (a.is_finite() && b.is_finite()) return Tolerance::fin(a.value() + b.value());
  if (a.is_finite()) return b;
  if (b.is_finite()) return a;
  if (a != b) throw std::domain_error("tol_add(+inf, -inf) is undefined");
  return a;
}

Tolerance tol_min(Tolerance a, Tolerance b) { return a < b ? a : b; }

Tolerance tol_max(Tolerance a, Tolerance b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, Tolerance t) { return os << t.str(); }

}  // namespace ftalg
