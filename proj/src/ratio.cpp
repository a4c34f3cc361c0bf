#include "hadaq/ratio.hpp"

#include <bit>

namespace hadaq {

std::string ratio_to_string(i64 num, i64 den) {
  if (den <= 0) throw domain_error("Ratio denominator must be positive");
  Ratio r = Ratio(num, den).reduced();
  if (r.den == 1) return std::to_string(r.num);
  if (std::has_single_bit(static_cast<std::uint64_t>(r.den))) {
    // Dyadic: terminating decimal. p/2^t = p·5^t / 10^t.
    const int t = std::countr_zero(static_cast<std::uint64_t>(r.den));
    i128 scaled = r.num;
    for (int i = 0; i < t; ++i) scaled *= 5;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits;
    if (scaled == 0) digits = "0";
    while (scaled > 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(scaled % 10)));
      scaled /= 10;
    }
    while (static_cast<int>(digits.size()) <= t) digits.push_back('0');
    std::string out = negative ? "-" : "";
    for (size_t i = digits.size(); i > static_cast<size_t>(t); --i) out.push_back(digits[i - 1]);
    out.push_back('.');
    for (size_t i = static_cast<size_t>(t); i > 0; --i) out.push_back(digits[i - 1]);
    while (out.back() == '0') out.pop_back();
    return out;
  }
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace hadaq
