#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace scg {

// Expression templates off so that Rational behaves like a plain value type
// in generic code shared with double.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", "-7", "0.125" or "1e-3" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact value of a finite double.
Rational exact_rational(double value);

/// Best rational approximation with denominator <= max_denominator
/// (continued fractions).
Rational approximate_rational(double value, std::int64_t max_denominator);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

// Scalar helpers so templates can run over Rational and double alike.
template <class S>
S from_rational(const Rational& value);

template <>
inline Rational from_rational<Rational>(const Rational& value) {
  return value;
}

template <>
inline double from_rational<double>(const Rational& value) {
  return to_double(value);
}

}  // namespace scg
