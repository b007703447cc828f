#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyreg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Parses a numerator/denominator pair given as decimal strings.
// Throws BadInput on malformed digits or denominator <= 0.
Rational rational_from_strings(const std::string& num, const std::string& den);

// Nearest rational with denominator 2^bits; used to snap sampled doubles
// onto exact coordinates.
Rational dyadic_from_double(double x, int bits);

// Fixed-point decimal rendering truncated toward zero (SVG output).
std::string to_decimal_string(const Rational& q, int digits);

}  // namespace polyreg
