#include "scg/rational.hpp"

#include <cctype>
#include <cmath>

#include "scg/errors.hpp"

namespace scg {
namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw ParseError("malformed rational \"" + std::string(text) + "\": " + why);
}

mpz_int pow10(unsigned e) {
  mpz_int r = 1;
  for (unsigned k = 0; k < e; ++k) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text, "empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num)) bad(text, "numerator must be an unsigned integer");
    if (!all_digits(den)) bad(text, "denominator must be an unsigned integer");
    mpz_int d(std::string{den});
    if (d == 0) bad(text, "zero denominator");
    Rational r(mpz_int(std::string{num}), d);
    return negative ? Rational(-r) : r;
  }

  // Decimal with optional fraction and exponent.
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    auto exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad(text, "bad exponent");
    exponent = std::stol(std::string{exp_text});
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto whole = mantissa.substr(0, dot);
    auto frac = mantissa.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text, "no digits");
    if (!whole.empty() && !all_digits(whole)) bad(text, "bad integer part");
    if (!frac.empty() && !all_digits(frac)) bad(text, "bad fractional part");
    digits = std::string{whole} + std::string{frac};
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) bad(text, "not a number");
    digits = std::string{mantissa};
  }
  mpz_int value(digits);
  Rational r = exponent >= 0 ? Rational(value * pow10(static_cast<unsigned>(exponent)))
                             : Rational(value, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
  if (is_integer(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw Error("cannot convert a non-finite double to a rational");
  return Rational(value);
}

Rational approximate_rational(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw Error("cannot approximate a non-finite double");
  // Convergents h/k of the continued fraction of |value|.
  const bool negative = value < 0;
  double x = std::fabs(value);
  mpz_int h_prev = 1, h = static_cast<long long>(std::floor(x));
  mpz_int k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    x = 1.0 / frac;
    const double a_d = std::floor(x);
    if (a_d > 9e15) break;
    const mpz_int a = static_cast<long long>(a_d);
    mpz_int h_next = a * h + h_prev;
    mpz_int k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = x - a_d;
  }
  Rational r(h, k);
  return negative ? Rational(-r) : r;
}

}  // namespace scg
