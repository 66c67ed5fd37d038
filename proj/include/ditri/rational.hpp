#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "ditri/error.hpp"

namespace ditri {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RVector = std::vector<Rational>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer not exceeding q.
inline Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);  // always positive
  Integer f = n / d;           // truncates toward zero
  if (n < 0 && f * d != n) --f;
  return f;
}

inline Integer ceil(const Rational& q) { return -floor(-q); }

/// Parses `p`, `-p` or `p/q`. Throws ParseError (without a line) on failure.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    Integer v(std::string(s.substr(i)));
    return s[0] == '-' ? Integer(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const RVector& v, char sep = ',') {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace ditri
