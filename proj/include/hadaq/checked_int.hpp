#pragma once

#include <cstdint>
#include <limits>

#include "hadaq/error.hpp"

namespace hadaq {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("64-bit add overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("64-bit subtract overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("64-bit multiply overflow");
  return r;
}

inline i64 narrow_i128(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw overflow_error("exact value does not fit 64 bits");
  return static_cast<i64>(v);
}

// sign with sign(0) = 0 (the quantizer convention).
inline int sign_of(i64 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Floor division for q > 0, exact for negative p as well.
inline i64 floor_div(i64 p, i64 q) {
  i64 d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

inline i128 floor_div(i128 p, i128 q) {
  i128 d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

}  // namespace hadaq
