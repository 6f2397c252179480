#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ufgdepth {

// Depth values are ratios of products of small integers; exact arithmetic keeps
// every reported number a true rational instead of a float approximation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "0", "1", "2/3", "-5/7"
inline std::string rational_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Plain (never scientific) decimal rendering with `significant` significant digits,
// round-half-up, trailing zeros stripped. Pure integer arithmetic, so the output
// is identical on every platform.
inline std::string decimal_string(const Rational& r, unsigned significant = 17) {
  if (significant == 0) significant = 1;
  const bool negative = r < 0;
  BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(r));
  const BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return "0";

  const BigInt ipart = num / den;
  BigInt rem = num % den;

  std::size_t frac_digits = 0;
  if (ipart > 0) {
    const std::size_t int_digits = ipart.str().size();
    frac_digits = int_digits >= significant ? 0 : significant - int_digits;
  } else {
    // Count leading fractional zeros so that `significant` digits remain after them.
    BigInt t = rem * 10;
    std::size_t zeros = 0;
    while (t < den) {
      t *= 10;
      ++zeros;
    }
    frac_digits = zeros + significant;
  }

  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_digits));
  // round-half-up: floor(num*scale/den + 1/2)
  const BigInt scaled = (num * scale * 2 + den) / (den * 2);

  std::string digits = scaled.str();
  std::string out;
  if (digits.size() <= frac_digits) {
    out = "0." + std::string(frac_digits - digits.size(), '0') + digits;
  } else if (frac_digits == 0) {
    out = digits;
  } else {
    out = digits.substr(0, digits.size() - frac_digits) + "." + digits.substr(digits.size() - frac_digits);
  }

  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace ufgdepth
