#pragma once

// Exact and high-precision number types shared by the whole library.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;
/// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_dec_float_50;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num, den);
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt out = 1;
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// sum_{k=0}^{upto} (-1)^k / k!, with the empty sum (upto < 0) equal to 0.
inline Rational alternating_inverse_factorial_sum(long upto) {
  Rational sum = 0;
  BigInt fact = 1;
  for (long k = 0; k <= upto; ++k) {
    if (k > 0) fact *= k;
    Rational term(BigInt(1), fact);
    if (k % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

inline Real to_real(const Rational& r) {
  return Real(numerator(r)) / Real(denominator(r));
}

/// "num/den" with the denominator always present.
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a fraction: '" + text + "'");
  }
}

inline std::string to_decimal_string(const Real& x, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  std::string s = os.str();
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

}  // namespace permlab
