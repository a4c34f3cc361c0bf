#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadaq/checked_int.hpp"
#include "hadaq/error.hpp"
#include "hadaq/ratio.hpp"

namespace hadaq {

using Vec = std::vector<i64>;

// Per-channel dead-zone quantizer family:
//   DQ_i(x) = sign(x)·⌊max(0, |x| + dead_off_i) / step_i⌋
//   IQ_i(q) = sign(q)·(recon_i·|q| + recon_off_i)
// with sign(0) = 0. step and recon are positive; the offsets are arbitrary
// integers.
struct QuantizerBank {
  Vec step;       // quantization stepwidth, ≥ 1
  Vec recon;      // reconstruction step, ≥ 1
  Vec dead_off;   // dead-zone offset
  Vec recon_off;  // reconstruction offset

  QuantizerBank() = default;
  QuantizerBank(Vec step_v, Vec recon_v, Vec dead_v, Vec recon_off_v);
  static QuantizerBank uniform(int n, i64 step, i64 recon, i64 dead, i64 recon_off);

  int size() const { return static_cast<int>(step.size()); }
  bool equal_steps() const;  // step == recon componentwise
};

// Scalar channel operations, exact on rationals. Channels are 0-based.
i64 dq(const QuantizerBank& bank, int ch, Ratio x);
i64 iq(const QuantizerBank& bank, int ch, i64 q);

// Closed staircase form of IQ∘DQ; equals iq(bank, ch, dq(bank, ch, y)) for
// every rational y.
i64 staircase(const QuantizerBank& bank, int ch, Ratio y);

// Componentwise application. Lengths must match the bank.
Vec dq_vec(const QuantizerBank& bank, const std::vector<Ratio>& x);
Vec iq_vec(const QuantizerBank& bank, const Vec& q);

// Reference implementations of the four textbook scalar quantizers. They are
// not representable in the QuantizerBank family in general (half-integer
// reconstruction levels) and none of the bound machinery applies to them.
enum class ClassicKind { mid_tread, mid_riser, mid_riser_toward_zero, dead_zone_intro };

ClassicKind classic_kind_from_name(const std::string& name);
std::string classic_kind_name(ClassicKind kind);

struct ClassicQuantizer {
  ClassicKind kind;
  i64 step;      // Δ ≥ 1
  i64 dead_off;  // δ, used by dead_zone_intro only

  i64 quantize(Ratio x) const;
  Ratio dequantize(i64 q) const;
};

ClassicQuantizer classic_quantizer(ClassicKind kind, i64 step, i64 dead_off = 0);

}  // namespace hadaq
