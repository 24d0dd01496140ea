#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace cograph {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// 113-bit mantissa.
using Real = boost::multiprecision::cpp_bin_float_quad;

inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

// Accepts "a/b", integers and finite decimals ("0.25", "1e-3" is not accepted).
Rational parse_rational(const std::string& text);

inline Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

}  // namespace cograph
