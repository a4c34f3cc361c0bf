#include "hadaq/bounds.hpp"

#include <algorithm>

namespace hadaq {

namespace {

void check_xmax(const BigInt& xmax) {
  if (xmax < 0) throw domain_error("xmax must be nonnegative");
}

}  // namespace

BigRat b_value(const QuantizerBank& bank, int ch, const BigInt& xmax) {
  check_xmax(xmax);
  if (ch < 0 || ch >= bank.size()) throw domain_error("channel index out of range");
  BigInt shifted = xmax + bank.dead_off[static_cast<size_t>(ch)];
  if (shifted < 0) shifted = 0;
  return BigRat(shifted, BigInt(bank.step[static_cast<size_t>(ch)]));
}

BigInt error_bound_general(const QuantizerBank& bank, const BigInt& xmax) {
  check_xmax(xmax);
  const int n = bank.size();
  BigInt worst = 0;
  for (int i = 0; i < n; ++i) {
    const BigInt step = bank.step[static_cast<size_t>(i)];
    const BigInt recon = bank.recon[static_cast<size_t>(i)];
    const BigInt dead = bank.dead_off[static_cast<size_t>(i)];
    const BigInt off = bank.recon_off[static_cast<size_t>(i)];
    const BigInt slope = recon - step;
    auto u_term = [&](const BigInt& j) { return abs_big(j * slope + off + dead); };
    auto v_term = [&](const BigInt& j) { return abs_big(j * slope + off + dead - recon); };

    BigInt channel = abs_big(step - dead);  // dead-zone edge, unconditional
    const BigInt first_break = step - dead;
    if (xmax >= first_break) {
      // ⌊B⌋ ≥ 1: endpoints of the arithmetic sequence U(1..⌊B⌋)
      BigInt bf = floor_div(xmax + dead, step);
      channel = std::max({channel, u_term(1), u_term(bf)});
    }
    if (xmax > first_break) {
      // ⌈B⌉ ≥ 2: endpoints of V(2..⌈B⌉)
      BigInt bc = ceil_div(xmax + dead, step);
      channel = std::max({channel, v_term(2), v_term(bc)});
    }
    worst = std::max(worst, channel);
  }
  return BigInt(n) * worst;
}

BigInt error_bound_equal_steps(const QuantizerBank& bank) {
  if (!bank.equal_steps())
    throw domain_error("equal-steps bound requires step == recon in every channel");
  const int n = bank.size();
  BigInt worst = 0;
  for (int i = 0; i < n; ++i) {
    const BigInt step = bank.step[static_cast<size_t>(i)];
    const BigInt dead = bank.dead_off[static_cast<size_t>(i)];
    const BigInt off = bank.recon_off[static_cast<size_t>(i)];
    worst = std::max(
        {worst, abs_big(off + dead), abs_big(off + dead - step), abs_big(step - dead)});
  }
  return BigInt(n) * worst;
}

BigInt magnitude_via_error(const BigInt& xmax, const BigInt& err_bound) {
  check_xmax(xmax);
  if (err_bound < 0) throw domain_error("error bound must be nonnegative");
  return xmax + err_bound;
}

namespace {

BigInt min_deadzone_width(const QuantizerBank& bank) {
  BigInt d = BigInt(bank.step[0]) - bank.dead_off[0];
  for (int i = 1; i < bank.size(); ++i)
    d = std::min(d, BigInt(bank.step[static_cast<size_t>(i)]) - bank.dead_off[static_cast<size_t>(i)]);
  return d;
}

BigInt nonzero_multiplier(const QuantizerBank& bank, const BigInt& xmax) {
  const BigInt d = min_deadzone_width(bank);
  if (d < 1)
    throw domain_error("nonzero-count bound requires min(step − dead offset) ≥ 1");
  // ⌊√n·xmax / d⌋ = ⌊⌊√(n·xmax²)⌋ / d⌋, exact for non-square n
  BigInt root = isqrt(BigInt(bank.size()) * xmax * xmax);
  return std::min(BigInt(bank.size()), BigInt(root / d));
}

// IQ_i(DQ_i(xmax)) for nonnegative xmax, exact.
BigInt recon_at(const QuantizerBank& bank, int i, const BigInt& xmax) {
  BigInt shifted = xmax + bank.dead_off[static_cast<size_t>(i)];
  if (shifted < 0) shifted = 0;
  BigInt q = shifted / bank.step[static_cast<size_t>(i)];
  if (q == 0) return 0;  // sign(0) = 0 suppresses the offset
  return q * bank.recon[static_cast<size_t>(i)] + bank.recon_off[static_cast<size_t>(i)];
}

}  // namespace

BigInt magnitude_theorem2(const QuantizerBank& bank, const BigInt& xmax) {
  check_xmax(xmax);
  const BigInt mult = nonzero_multiplier(bank, xmax);
  BigInt peak = recon_at(bank, 0, xmax);
  for (int i = 1; i < bank.size(); ++i) peak = std::max(peak, recon_at(bank, i, xmax));
  return mult * peak;
}

BigInt nonzero_count_bound(const QuantizerBank& bank, const BigInt& xmax) {
  check_xmax(xmax);
  return nonzero_multiplier(bank, xmax);
}

int bit_width(const BigInt& magnitude_bound) {
  if (magnitude_bound < 0) throw domain_error("magnitude bound must be nonnegative");
  if (magnitude_bound == 0) return 1;
  // ⌈log2(m+1)⌉ + 1 == bit length of m, plus the sign bit
  return static_cast<int>(boost::multiprecision::msb(magnitude_bound)) + 2;
}

BigRat relative_error_coefficient(const QuantizerBank& bank) {
  BigRat worst = 0;
  for (int i = 0; i < bank.size(); ++i) {
    BigInt diff = BigInt(bank.recon[static_cast<size_t>(i)]) - bank.step[static_cast<size_t>(i)];
    BigRat r(abs_big(diff), BigInt(bank.step[static_cast<size_t>(i)]));
    worst = std::max(worst, r);
  }
  return BigRat(bank.size()) * worst;
}

BoundReport full_report(const QuantizerBank& bank, const BigInt& xmax) {
  BoundReport rep;
  rep.xmax_in = xmax;
  rep.err_bound_general = error_bound_general(bank, xmax);
  if (bank.equal_steps()) rep.err_bound_equal_steps = error_bound_equal_steps(bank);
  rep.mag_via_error = magnitude_via_error(xmax, rep.err_bound_general);
  try {
    rep.mag_theorem2 = magnitude_theorem2(bank, xmax);
    rep.nonzero_bound = nonzero_count_bound(bank, xmax);
  } catch (const domain_error&) {
    // min(step − dead offset) ≤ 0: the derivation collapses, only the
    // error-route magnitude bound remains.
  }
  rep.mag_combined =
      rep.mag_theorem2 ? std::min(rep.mag_via_error, *rep.mag_theorem2) : rep.mag_via_error;
  rep.bit_width = bit_width(rep.mag_combined);
  return rep;
}

}  // namespace hadaq
