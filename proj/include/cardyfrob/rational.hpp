#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace cardyfrob {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// num / den for any nonzero den. Boost 1.74's rational<cpp_int> rejects negative denominators
/// outright, so the sign is moved to the numerator first.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw LogicError("zero denominator");
  if (den < 0) return Rational(Integer(-num), Integer(-den));
  return Rational(num, den);
}
inline bool is_zero(const Integer& z) { return z.is_zero(); }

/// Canonical text form: "n" for integers, otherwise "p/q" with q > 0 and gcd(p, q) = 1.
inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw InputError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

} // namespace detail

/// Parses "n" or "p/q". Zero denominators are rejected.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
  const Integer num = detail::parse_integer(text.substr(0, slash), text);
  const Integer den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

} // namespace cardyfrob
