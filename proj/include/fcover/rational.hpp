#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fcover {

using Integer = mpz_class;
// GMP keeps mpq values canonical after every arithmetic operation: lowest terms, positive
// denominator, zero as 0/1.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_lowest_terms(const Rational& r) {
  if (r.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1 || (r.get_num() == 0 && r.get_den() == 1);
}

// Accepts "[-]digits" or "[-]digits/digits".
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  Rational r = make_rational(Integer(std::string(num)), Integer(std::string(den)));
  return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace fcover
