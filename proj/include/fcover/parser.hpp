#pragma once

#include <cctype>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/polynomial.hpp"

namespace fcover {

// Grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := rational | name | '(' expr ')'
//   rational:= digits ('/' digits)?
//
// Names are t1..tn, y1..yn, z. With field_names set, e1..en are also accepted and read as the
// symbol y1..yn of the coordinate field, which is how vector fields are written in spec files.

struct ParseOptions {
  bool field_names = false;
  MonomialOrder order = {};
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, const VariableSet& vars, const ParseOptions& opts)
      : src_(src), vars_(vars), opts_(opts) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (!accept('*')) return acc;
      acc = acc * unary();
    }
  }

  Polynomial unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.empty()) fail("expected integer exponent");
    if (digits.size() > 6) fail_at(start, "exponent too large");
    unsigned k = static_cast<unsigned>(std::stoul(digits));
    skip_space();
    if (peek() == '^') fail("chained exponents need parentheses");
    return base.pow(k);
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    std::size_t start = pos_;
    std::string num = read_digits();
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      den = read_digits();
      if (den.empty()) fail("expected denominator");
      if (Integer(den) == 0) fail_at(start, "zero denominator");
    }
    return Polynomial::constant(vars_, make_rational(Integer(num), Integer(den)), opts_.order);
  }

  Polynomial name() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    std::string_view id = src_.substr(start, pos_ - start);
    std::string lookup(id);
    if (opts_.field_names && id.size() >= 2 && id[0] == 'e') lookup[0] = 'y';
    else if (opts_.field_names && id.size() >= 2 && id[0] == 'y') lookup.clear();
    auto v = lookup.empty() ? std::nullopt : vars_.find(lookup);
    if (!v) fail_at(start, "unknown variable '" + std::string(id) + "'");
    return Polynomial::variable(vars_, *v, opts_.order);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw ParseError(at, what); }

  std::string_view src_;
  const VariableSet& vars_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view src, const VariableSet& vars, const ParseOptions& opts = {}) {
  return detail::ExpressionParser(src, vars, opts).parse();
}

}  // namespace fcover
