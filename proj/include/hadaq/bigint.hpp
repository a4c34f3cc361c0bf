#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "hadaq/error.hpp"

namespace hadaq {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// floor(sqrt(v)) by Newton iteration on integers.
inline BigInt isqrt(const BigInt& v) {
  if (v < 0) throw domain_error("isqrt of negative value");
  if (v == 0) return 0;
  BigInt x = BigInt(1) << ((boost::multiprecision::msb(v) / 2) + 1);
  for (;;) {
    BigInt y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

// floor(p/q) for q > 0, correct for negative p.
inline BigInt floor_div(const BigInt& p, const BigInt& q) {
  BigInt d = p / q;
  if (p % q != 0 && ((p < 0) != (q < 0))) --d;
  return d;
}

inline BigInt ceil_div(const BigInt& p, const BigInt& q) {
  BigInt d = p / q;
  if (p % q != 0 && ((p < 0) == (q < 0))) ++d;
  return d;
}

inline BigInt floor_rat(const BigRat& r) {
  return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rat(const BigRat& r) {
  return ceil_div(numerator(r), denominator(r));
}

// C(a, b) with the out-of-range convention C(a, b) = 0 for b < 0 or b > a.
inline BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is a binomial prefix
  }
  return r;
}

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace hadaq
