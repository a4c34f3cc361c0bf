#include "hadaq/quantizer.hpp"

namespace hadaq {

QuantizerBank::QuantizerBank(Vec step_v, Vec recon_v, Vec dead_v, Vec recon_off_v)
    : step(std::move(step_v)),
      recon(std::move(recon_v)),
      dead_off(std::move(dead_v)),
      recon_off(std::move(recon_off_v)) {
  const size_t n = step.size();
  if (recon.size() != n || dead_off.size() != n || recon_off.size() != n)
    throw domain_error("quantizer bank parameter vectors must have equal length");
  if (n == 0) throw domain_error("quantizer bank must have at least one channel");
  for (size_t i = 0; i < n; ++i)
    if (step[i] < 1 || recon[i] < 1)
      throw domain_error("stepwidth and reconstruction step must be positive in channel " +
                         std::to_string(i));
}

QuantizerBank QuantizerBank::uniform(int n, i64 step, i64 recon, i64 dead, i64 recon_off) {
  if (n < 1) throw domain_error("bank size must be positive");
  auto c = [n](i64 v) { return Vec(static_cast<size_t>(n), v); };
  return QuantizerBank(c(step), c(recon), c(dead), c(recon_off));
}

bool QuantizerBank::equal_steps() const { return step == recon; }

namespace {

void check_channel(const QuantizerBank& bank, int ch) {
  if (ch < 0 || ch >= bank.size())
    throw domain_error("channel index " + std::to_string(ch) + " out of range");
}

}  // namespace

i64 dq(const QuantizerBank& bank, int ch, Ratio x) {
  check_channel(bank, ch);
  if (x.num == 0) return 0;
  // |x| + δ = (|num| + δ·den)/den; the floor of the nonnegative part over a
  // positive integer is one 128-bit division.
  i128 shifted = i128(x.num < 0 ? -x.num : x.num) + i128(bank.dead_off[static_cast<size_t>(ch)]) * x.den;
  if (shifted <= 0) return 0;
  i128 q = shifted / (i128(bank.step[static_cast<size_t>(ch)]) * x.den);
  return x.num < 0 ? -narrow_i128(q) : narrow_i128(q);
}

i64 iq(const QuantizerBank& bank, int ch, i64 q) {
  check_channel(bank, ch);
  if (q == 0) return 0;
  i128 mag = i128(bank.recon[static_cast<size_t>(ch)]) * (q < 0 ? -q : q) +
             bank.recon_off[static_cast<size_t>(ch)];
  return q < 0 ? narrow_i128(-mag) : narrow_i128(mag);
}

i64 staircase(const QuantizerBank& bank, int ch, Ratio y) {
  check_channel(bank, ch);
  const i64 step = bank.step[static_cast<size_t>(ch)];
  const i64 dead = bank.dead_off[static_cast<size_t>(ch)];
  const i64 recon = bank.recon[static_cast<size_t>(ch)];
  const i64 off = bank.recon_off[static_cast<size_t>(ch)];
  // The two stepped branches overlap once dead ≥ step; picking the branch by
  // the sign of y keeps the function equal to iq∘dq everywhere.
  if (y.num > 0) {
    i128 shifted = i128(y.num) + i128(dead) * y.den;  // (y + δ)·den
    if (shifted < i128(step) * y.den) return 0;       // y < Δ − δ
    i128 j = shifted / (i128(step) * y.den);
    return narrow_i128(j * recon + off);
  }
  if (y.num < 0) {
    i128 shifted = i128(dead) * y.den - y.num;        // (δ − y)·den
    if (shifted < i128(step) * y.den) return 0;       // y > δ − Δ
    i128 j = shifted / (i128(step) * y.den);
    return narrow_i128(-(j * recon + off));
  }
  return 0;
}

Vec dq_vec(const QuantizerBank& bank, const std::vector<Ratio>& x) {
  if (static_cast<int>(x.size()) != bank.size())
    throw domain_error("vector length does not match bank size");
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = dq(bank, static_cast<int>(i), x[i]);
  return out;
}

Vec iq_vec(const QuantizerBank& bank, const Vec& q) {
  if (static_cast<int>(q.size()) != bank.size())
    throw domain_error("vector length does not match bank size");
  Vec out(q.size());
  for (size_t i = 0; i < q.size(); ++i) out[i] = iq(bank, static_cast<int>(i), q[i]);
  return out;
}

ClassicKind classic_kind_from_name(const std::string& name) {
  if (name == "mid-tread") return ClassicKind::mid_tread;
  if (name == "mid-riser") return ClassicKind::mid_riser;
  if (name == "mid-riser-toward-zero") return ClassicKind::mid_riser_toward_zero;
  if (name == "dead-zone-intro") return ClassicKind::dead_zone_intro;
  throw usage_error("unknown quantizer kind '" + name + "'");
}

std::string classic_kind_name(ClassicKind kind) {
  switch (kind) {
    case ClassicKind::mid_tread: return "mid-tread";
    case ClassicKind::mid_riser: return "mid-riser";
    case ClassicKind::mid_riser_toward_zero: return "mid-riser-toward-zero";
    case ClassicKind::dead_zone_intro: return "dead-zone-intro";
  }
  throw domain_error("invalid quantizer kind");
}

ClassicQuantizer classic_quantizer(ClassicKind kind, i64 step, i64 dead_off) {
  if (step < 1) throw domain_error("classic quantizer stepwidth must be positive");
  return ClassicQuantizer{kind, step, dead_off};
}

i64 ClassicQuantizer::quantize(Ratio x) const {
  const i128 num = x.num, den = x.den;
  switch (kind) {
    case ClassicKind::mid_tread:
      // ⌊x/Δ + 1/2⌋ = ⌊(2·num + Δ·den) / (2·Δ·den)⌋
      return narrow_i128(floor_div(2 * num + i128(step) * den, 2 * i128(step) * den));
    case ClassicKind::mid_riser:
      return narrow_i128(floor_div(num, i128(step) * den));
    case ClassicKind::mid_riser_toward_zero: {
      i128 q = (num < 0 ? -num : num) / (i128(step) * den);
      return num < 0 ? -narrow_i128(q) : narrow_i128(q);
    }
    case ClassicKind::dead_zone_intro: {
      if (num == 0) return 0;
      // sign(x)·max(0, ⌊(|x| − δ)/Δ⌋ + 1)
      i128 j = floor_div((num < 0 ? -num : num) - i128(dead_off) * den, i128(step) * den) + 1;
      if (j < 0) j = 0;
      return num < 0 ? -narrow_i128(j) : narrow_i128(j);
    }
  }
  throw domain_error("invalid quantizer kind");
}

Ratio ClassicQuantizer::dequantize(i64 q) const {
  const i128 aq = q < 0 ? -i128(q) : i128(q);
  switch (kind) {
    case ClassicKind::mid_tread:
      return Ratio(checked_mul(step, q), 1);
    case ClassicKind::mid_riser:
      // Δ·(q + 1/2), signed q as-is
      return Ratio(narrow_i128(i128(step) * (2 * i128(q) + 1)), 2);
    case ClassicKind::mid_riser_toward_zero: {
      // sign(q)·Δ·(|q| + 1/2)
      if (q == 0) return Ratio(0, 1);
      i128 mag = i128(step) * (2 * aq + 1);
      return Ratio(narrow_i128(q < 0 ? -mag : mag), 2);
    }
    case ClassicKind::dead_zone_intro: {
      // sign(q)·(Δ·(|q| − 1/2) + δ)
      if (q == 0) return Ratio(0, 1);
      i128 mag = i128(step) * (2 * aq - 1) + 2 * i128(dead_off);
      return Ratio(narrow_i128(q < 0 ? -mag : mag), 2);
    }
  }
  throw domain_error("invalid quantizer kind");
}

}  // namespace hadaq
