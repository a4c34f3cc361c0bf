#pragma once

#include <optional>

#include "hadaq/bigint.hpp"
#include "hadaq/quantizer.hpp"

namespace hadaq {

// Closed-form bounds for the transform/quantization chain, all exact. xmax
// is a declared bound on ‖x‖∞ (planner input), not an inspected vector.
struct BoundReport {
  BigInt xmax_in;
  BigInt err_bound_general;                    // worst ‖x′ − x‖∞
  std::optional<BigInt> err_bound_equal_steps; // present iff step == recon componentwise
  BigInt mag_via_error;                        // xmax + err_bound_general
  std::optional<BigInt> mag_theorem2;          // nonzero-count route; needs min(step−dead) ≥ 1
  BigInt mag_combined;                         // min of the available magnitude bounds
  std::optional<BigInt> nonzero_bound;         // bound on nonzero quantized components
  int bit_width = 1;                           // signed storage width for mag_combined
};

// max(0, xmax + dead_off_i) / step_i, the breakpoint count at |y| = xmax.
BigRat b_value(const QuantizerBank& bank, int ch, const BigInt& xmax);

BigInt error_bound_general(const QuantizerBank& bank, const BigInt& xmax);

// Requires step == recon componentwise; independent of xmax.
BigInt error_bound_equal_steps(const QuantizerBank& bank);

BigInt magnitude_via_error(const BigInt& xmax, const BigInt& err_bound);

// min(n, ⌊√n·xmax / min_i(step_i − dead_off_i)⌋) · max_i IQ_i(DQ_i(xmax)).
// The floor is computed exactly as ⌊isqrt(n·xmax²) / D⌋. Throws when
// min_i(step_i − dead_off_i) ≤ 0.
BigInt magnitude_theorem2(const QuantizerBank& bank, const BigInt& xmax);

// The multiplier of the previous bound: how many outputs can be nonzero.
BigInt nonzero_count_bound(const QuantizerBank& bank, const BigInt& xmax);

// Smallest K with −2^{K−1} ≤ −m and m ≤ 2^{K−1} − 1, via integer bit length.
int bit_width(const BigInt& magnitude_bound);

// n · max_i |recon_i − step_i| / step_i, the leading coefficient of the
// relative-error bound.
BigRat relative_error_coefficient(const QuantizerBank& bank);

BoundReport full_report(const QuantizerBank& bank, const BigInt& xmax);

}  // namespace hadaq
