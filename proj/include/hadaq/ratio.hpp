#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hadaq/checked_int.hpp"
#include "hadaq/error.hpp"

namespace hadaq {

// Exact rational with a 64-bit numerator and positive 64-bit denominator.
// Not normalized on construction: transform outputs keep their natural
// denominator (the matrix order) so traces stay comparable digit-for-digit.
struct Ratio {
  i64 num = 0;
  i64 den = 1;

  Ratio() = default;
  Ratio(i64 n, i64 d) : num(n), den(d) {
    if (d <= 0) throw domain_error("Ratio denominator must be positive");
  }
  static Ratio integer(i64 v) { return Ratio(v, 1); }

  int sign() const { return sign_of(num); }
  Ratio abs() const { return Ratio(num < 0 ? -num : num, den); }
  Ratio neg() const { return Ratio(-num, den); }
  bool is_integer() const { return num % den == 0; }

  Ratio reduced() const {
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return Ratio(0, 1);
    return Ratio(num / g, den / g);
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<i128>(a.num) * b.den == static_cast<i128>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    i128 l = static_cast<i128>(a.num) * b.den;
    i128 r = static_cast<i128>(b.num) * a.den;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Renders exactly: integers plainly, dyadic rationals as terminating
  // decimals, anything else as "p/q" (reduced).
  std::string to_string() const;
};

std::string ratio_to_string(i64 num, i64 den);

inline std::string Ratio::to_string() const { return ratio_to_string(num, den); }

}  // namespace hadaq
