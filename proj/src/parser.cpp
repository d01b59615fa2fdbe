#include "ftalg/parser.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <vector>

namespace ftalg {

ParseError::ParseError(const std::string& message, SourceSpan span)
    : std::runtime_error(message + " at " + std::to_string(span.start) + ".." +
                         std::to_string(span.end)),
      span_(span) {}

namespace {

enum class Tok : std::uint8_t { Nat, Ident, Plus, Times, Caret, LParen, RParen, End };

struct Token {
  Tok type;
  std::uint64_t nat = 0;   // Nat
  std::string_view text;   // Ident
  SourceSpan span;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok t, std::size_t start, std::size_t end) {
    out.push_back({t, 0, {}, {start, end}});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c >= '0' && c <= '9') {
      std::uint64_t v = 0;
      bool overflow = false;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(src[i] - '0');
        if (v > 1'000'000) overflow = true;  // repetition counts stay small
        ++i;
      }
      if (overflow) throw ParseError("number too large", {start, i});
      out.push_back({Tok::Nat, v, {}, {start, i}});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, 0, src.substr(start, i - start), {start, i}});
    } else if (c == '+') {
      push(Tok::Plus, start, ++i);
    } else if (c == '*') {
      push(Tok::Times, start, ++i);
    } else if (c == '^') {
      push(Tok::Caret, start, ++i);
    } else if (c == '(') {
      push(Tok::LParen, start, ++i);
    } else if (c == ')') {
      push(Tok::RParen, start, ++i);
    } else if (static_cast<unsigned char>(c) == 0xC3 && i + 1 < src.size() &&
               static_cast<unsigned char>(src[i + 1]) == 0x97) {
      // UTF-8 multiplication sign '×'
      i += 2;
      push(Tok::Times, start, i);
    } else {
      throw ParseError("unexpected character", {start, i + 1});
    }
  }
  out.push_back({Tok::End, 0, {}, {src.size(), src.size()}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (cur().type != Tok::End)
      throw ParseError("unexpected trailing input", cur().span);
    return e;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek() const {
    return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : tokens_.size() - 1];
  }
  void advance() { ++pos_; }

  static bool base_start(const Token& t) {
    return t.type == Tok::Ident || t.type == Tok::LParen ||
           (t.type == Tok::Nat && t.nat <= 1);
  }

  // An Ident "x" doubles as the product operator, but only in infix position;
  // as a base it is just the atom named x.
  bool at_times() const {
    return cur().type == Tok::Times ||
           (cur().type == Tok::Ident && cur().text == "x");
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms;
    terms.push_back(term());
    while (cur().type == Tok::Plus) {
      advance();
      terms.push_back(term());
    }
    return terms.size() == 1 ? terms.front() : sum(std::move(terms));
  }

  ExprPtr term() {
    std::vector<ExprPtr> factors;
    factors.push_back(factor());
    while (at_times()) {
      advance();
      factors.push_back(factor());
    }
    return factors.size() == 1 ? factors.front() : product(std::move(factors));
  }

  ExprPtr factor() {
    std::optional<std::uint64_t> coefficient;
    if (cur().type == Tok::Nat && base_start(peek())) {
      if (cur().nat == 0)
        throw ParseError("coefficient must be positive", cur().span);
      coefficient = cur().nat;
      advance();
    }
    ExprPtr e = base();
    if (cur().type == Tok::Caret) {
      advance();
      if (cur().type != Tok::Nat)
        throw ParseError("expected an exponent after '^'", cur().span);
      if (cur().nat == 0)
        throw ParseError("exponent must be positive", cur().span);
      e = n_fold_product(e, cur().nat);
      advance();
    }
    if (coefficient) e = n_fold_sum(e, *coefficient);
    return e;
  }

  ExprPtr base() {
    const Token& t = cur();
    switch (t.type) {
      case Tok::Ident: {
        advance();
        return atom(std::string(t.text));
      }
      case Tok::Nat:
        if (t.nat == 0) {
          advance();
          return zero();
        }
        if (t.nat == 1) {
          advance();
          return one();
        }
        throw ParseError("a number must be 0, 1, or a coefficient on a base",
                         t.span);
      case Tok::LParen: {
        advance();
        ExprPtr e = expr();
        if (cur().type != Tok::RParen)
          throw ParseError("expected ')'", cur().span);
        advance();
        return e;
      }
      default:
        throw ParseError("expected an atom, '0', '1', or '('", t.span);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Grammar level of a rendered fragment; higher binds tighter.
enum Level : int { kExpr = 0, kTerm = 1, kFactor = 2 };

struct Rendered {
  std::string text;
  int level;
};

Rendered render(const Expr& e);

bool uniform(const Expr& e) {
  auto ch = e.children();
  for (std::size_t i = 1; i < ch.size(); ++i)
    if (!structurally_equal(*ch[0], *ch[i])) return false;
  return true;
}

std::string base_str(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Atom: return e.atom_name();
    case ExprKind::Zero: return "0";
    case ExprKind::One: return "1";
    default: return "(" + render(e).text + ")";
  }
}

std::string exp_str(const Expr& base, std::size_t n) {
  return base_str(base) + "^" + std::to_string(n);
}

std::string coef_str(std::size_t n, const Expr& e) {
  std::string prefix = std::to_string(n);
  if (e.kind() == ExprKind::Atom) return prefix + e.atom_name();
  if (e.kind() == ExprKind::Product && uniform(e))
    return prefix + exp_str(*e.children()[0], e.children().size());
  // Zero/One need parentheses too: "20" would lex as one number.
  return prefix + "(" + render(e).text + ")";
}

std::string joined(const Expr& e, int child_min_level, const char* sep) {
  std::string out;
  for (const auto& child : e.children()) {
    if (!out.empty()) out += sep;
    Rendered r = render(*child);
    if (r.level < child_min_level)
      out += "(" + r.text + ")";
    else
      out += r.text;
  }
  return out;
}

Rendered render(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Atom: return {e.atom_name(), kFactor};
    case ExprKind::Zero: return {"0", kFactor};
    case ExprKind::One: return {"1", kFactor};
    case ExprKind::Sum:
      if (uniform(e)) return {coef_str(e.children().size(), *e.children()[0]), kFactor};
      return {joined(e, kTerm, " + "), kExpr};
    case ExprKind::Product:
      if (uniform(e)) return {exp_str(*e.children()[0], e.children().size()), kFactor};
      return {joined(e, kFactor, "*"), kTerm};
  }
  return {};
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string format(const Expr& e) { return render(e).text; }

std::string format(const ExprPtr& e) { return render(*e).text; }

}  // namespace ftalg
