#include "polyreg/rational.hpp"

#include "polyreg/error.hpp"

#include <cmath>
#include <cstdlib>

namespace polyreg {

Rational rational_from_strings(const std::string& num, const std::string& den) {
  BigInt n, d;
  try {
    n = BigInt(num);
    d = BigInt(den);
  } catch (const std::exception&) {
    throw BadInput("rational: expected decimal integers, got \"" + num + "\"/\"" + den + "\"");
  }
  if (d <= 0) throw BadInput("rational: denominator must be positive, got \"" + den + "\"");
  return Rational(n, d);
}

Rational dyadic_from_double(double x, int bits) {
  const double scaled = std::ldexp(x, bits);
  if (!std::isfinite(scaled) || std::abs(scaled) > 9.0e18)
    throw BadInput("dyadic_from_double: value out of range");
  const long long m = std::llround(scaled);
  return Rational(BigInt(m), BigInt(1) << bits);
}

std::string to_decimal_string(const Rational& q, int digits) {
  BigInt n = numer(q);
  const BigInt d = denom(q);
  const bool neg = n < 0;
  if (neg) n = -n;
  BigInt ip = n / d;
  BigInt rem = n % d;
  std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
  out += ip.str();
  if (digits > 0) {
    out += '.';
    for (int k = 0; k < digits; ++k) {
      rem *= 10;
      out += static_cast<char>('0' + (rem / d).convert_to<int>());
      rem %= d;
    }
  }
  return out;
}

}  // namespace polyreg
