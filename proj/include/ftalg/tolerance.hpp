#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ftalg {

// Extended integer used as the fault-tolerance carrier:
//   -inf < ... < -1 < 0 < 1 < ... < +inf
// Phi values are -inf, finite >= -1, or +inf (Fin(-1) is the worst-case
// tolerance of the always-down system, +inf/-inf belong to the identity
// elements). The carrier itself admits any finite value so that intermediate
// sums in n-ary folds stay representable.
class Tolerance {
 public:
  static Tolerance neg_inf() { return Tolerance(Rank::NegInf, 0); }
  static Tolerance pos_inf() { return Tolerance(Rank::PosInf, 0); }
  static Tolerance fin(std::int64_t k) { return Tolerance(Rank::Finite, k); }

  bool is_neg_inf() const { return rank_ == Rank::NegInf; }
  bool is_pos_inf() const { return rank_ == Rank::PosInf; }
  bool is_finite() const { return rank_ == Rank::Finite; }

  // Finite value; throws std::domain_error on an infinity.
  std::int64_t value() const;

  // "-inf", "+inf", or the decimal value.
  std::string str() const;

  friend bool operator==(Tolerance a, Tolerance b) = default;
  friend std::strong_ordering operator<=>(Tolerance a, Tolerance b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  enum class Rank : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };

  Tolerance(Rank r, std::int64_t v) : rank_(r), value_(v) {}

  Rank rank_;
  std::int64_t value_;
};

// Saturating addition: an infinity absorbs any finite operand. Throws
// std::domain_error on +inf + -inf; the Phi recursions never produce that
// form, so hitting it signals an engine bug.
Tolerance tol_add(Tolerance a, Tolerance b);

Tolerance tol_min(Tolerance a, Tolerance b);
Tolerance tol_max(Tolerance a, Tolerance b);

std::ostream& operator<<(std::ostream& os, Tolerance t);

}  // namespace ftalg
