#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ftalg/expr.hpp"

namespace ftalg {

// Byte range [start, end) into the parsed input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span);

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// Grammar (whitespace insignificant between tokens):
//   expr   := term ('+' term)*
//   term   := factor (('*' | 'x' | '×') factor)*
//   factor := NAT? base ('^' NAT)?
//   base   := ATOM | '0' | '1' | '(' expr ')'
// A coefficient n desugars to an n-ary Sum of copies and an exponent n to an
// n-ary Product; the coefficient binds the exponentiated base, so mA^n means
// m(A^n). Coefficients and exponents must be positive ('1A' and 'A^1' are
// just A). Throws ParseError with the offending span.
ExprPtr parse(std::string_view text);

// Emits a string that parses back to a structurally identical tree,
// re-sugaring a node as nA / A^n when all its children are identical.
// Parenthesizes minimally under the precedence ^ > coefficient > '*' > '+'.
std::string format(const Expr& e);
std::string format(const ExprPtr& e);

}  // namespace ftalg
