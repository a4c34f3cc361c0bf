// Acceptance suite: one line per criterion, exact checks, pinned tolerances.
//
// Criterion 1 carries a known, explained failure: the archived final vector
// of reference trace A cannot be produced by ANY single ±1 orthogonal
// transform consistent with the trace's own t1 (exhaustively verified during
// development by assembling candidate matrices row by row under both forward
// products and both inverse products; zero assemblies exist). The archived
// vector equals the true inverse output re-listed in sub-band order, which
// criterion 1 also asserts. Every other value of trace A — and all of trace
// B — is reproduced bit for bit.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hadaq/bounds.hpp"
#include "hadaq/norms.hpp"
#include "hadaq/pipeline.hpp"
#include "hadaq/search.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

using namespace hadaq;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  bool long_run_only = false;
  std::function<std::optional<std::string>()> check;  // nullopt = pass
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<std::string> vec_diff(const char* what, const Vec& got, const Vec& want) {
  if (got == want) return std::nullopt;
  for (size_t i = 0; i < std::min(got.size(), want.size()); ++i)
    if (got[i] != want[i])
      return std::string(what) + " differs first at index " + std::to_string(i) + ": got " +
             std::to_string(got[i]) + ", want " + std::to_string(want[i]);
  return std::string(what) + " length mismatch";
}

QuantizerBank trace_a_bank() { return QuantizerBank::uniform(16, 1000, 1000, 0, 0); }
QuantizerBank rz_bank(int n) { return QuantizerBank::uniform(n, 1, 1, 0, 0); }

// ---------------------------------------------------------------- criterion 1
std::optional<std::string> criterion1_reproducible() {
  HadamardMatrix h = ref::subband_order_16();
  const Vec x = ref::to_vec(ref::kBlockAX);
  auto start = Clock::now();
  PipelineTrace tr = run(h, trace_a_bank(), x);
  const double elapsed = ms_since(start);

  if (auto d = vec_diff("x", tr.x, x)) return d;
  if (auto d = vec_diff("t1 numerators", tr.t1.num, ref::to_vec(ref::kBlockAT1Num))) return d;
  if (tr.t1.den != 16) return std::string("t1 denominator is not 16");
  if (auto d = vec_diff("t2", tr.t2, ref::to_vec(ref::kBlockAT2))) return d;
  if (auto d = vec_diff("t3", tr.t3, ref::to_vec(ref::kBlockAT3))) return d;
  if (tr.x_prime[0] != 10000)
    return std::string("x'[0] = ") + std::to_string(tr.x_prime[0]) + ", want 10000";
  if (tr.err_inf != ref::kBlockAErrInf)
    return std::string("errInf = ") + std::to_string(tr.err_inf) + ", want 5984";
  if (auto d = vec_diff("x' (computed inverse)", tr.x_prime, ref::to_vec(ref::kBlockAXPrime)))
    return d;
  // the archived final vector is the computed one re-listed in sub-band order
  for (int p = 0; p < 16; ++p) {
    const i64 archived = ref::kBlockAXPrimeAsPrinted[static_cast<size_t>(p)];
    const i64 reordered =
        tr.x_prime[static_cast<size_t>(ref::kSubbandRowOrder[static_cast<size_t>(p)])];
    if (archived != reordered)
      return std::string("archived x' is not the sub-band re-listing at index ") +
             std::to_string(p);
  }
  if (elapsed >= 1.0)
    return std::string("runtime ") + std::to_string(elapsed) + " ms exceeds 1 ms";
  return std::nullopt;
}

std::optional<std::string> criterion1_strict() {
  HadamardMatrix h = ref::subband_order_16();
  PipelineTrace tr = run(h, trace_a_bank(), ref::to_vec(ref::kBlockAX));
  if (auto d = vec_diff("x' (strict, vs archived listing)", tr.x_prime,
                        ref::to_vec(ref::kBlockAXPrimeAsPrinted)))
    return std::string(*d) +
           " [expected: the archived listing is provably inconsistent with its own t1; "
           "see the header comment]";
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 2
std::optional<std::string> criterion2_trace_b() {
  HadamardMatrix h = ref::subband_order_16();
  PipelineTrace tr = run(h, rz_bank(16), ref::to_vec(ref::kBlockBX));
  if (auto d = vec_diff("t1 numerators", tr.t1.num, ref::to_vec(ref::kBlockBT1Num))) return d;
  for (int i = 0; i < 16; ++i)
    if (tr.t1.at(i).to_string() != ref::kBlockBT1Text[static_cast<size_t>(i)])
      return std::string("t1 text differs at index ") + std::to_string(i) + ": got " +
             tr.t1.at(i).to_string();
  if (auto d = vec_diff("t2", tr.t2, ref::to_vec(ref::kBlockBT2))) return d;
  if (auto d = vec_diff("x'", tr.x_prime, ref::to_vec(ref::kBlockBXPrime))) return d;
  if (linf(tr.x) != 4096) return std::string("|x|inf is not 4096");
  if (linf(tr.x_prime) != 4097) return std::string("|x'|inf is not 4097");
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 3
std::optional<std::string> criterion3_norm_table() {
  const i64 expect[5] = {1, 2, 8, 20, 64};
  for (int k = 0; k <= 4; ++k) {
    auto start = Clock::now();
    NormInf1Result r = norm_inf_1(IntMatrix::from_hadamard(HadamardMatrix::sylvester(k)));
    const double elapsed = ms_since(start);
    if (r.value != expect[k])
      return "order " + std::to_string(1 << k) + ": got " + std::to_string(r.value) + ", want " +
             std::to_string(expect[k]);
    if (elapsed >= 1000.0)
      return "order " + std::to_string(1 << k) + " took " + std::to_string(elapsed) + " ms";
  }
  return std::nullopt;
}

std::optional<std::string> criterion3_norm32() {
  NormRunConfig cfg;
  cfg.long_run = true;
  NormInf1Result r = norm_inf_1(IntMatrix::from_hadamard(HadamardMatrix::sylvester(5)), cfg);
  if (r.value != 160) return "order 32: got " + std::to_string(r.value) + ", want 160";
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 4
std::optional<std::string> criterion4_excess_equality() {
  SplitMix64 rng(20240);
  for (int k = 0; k <= 4; ++k) {
    HadamardMatrix base = HadamardMatrix::sylvester(k);
    for (int trial = 0; trial < 21; ++trial) {
      HadamardMatrix h = trial == 0 ? base : test::random_equivalent(rng, base);
      const i64 via_norm = norm_inf_1(IntMatrix::from_hadamard(h)).value;
      const i64 via_signs = max_excess_sign_enum(h).value;
      if (via_norm != via_signs)
        return "order " + std::to_string(h.order()) + " trial " + std::to_string(trial) +
               ": norm " + std::to_string(via_norm) + " vs sign-selection " +
               std::to_string(via_signs);
      if (h.order() <= 4) {
        const i64 oracle = test::exhaustive_diag_excess(h);
        if (via_norm != oracle)
          return "order " + std::to_string(h.order()) + ": diagonal oracle " +
                 std::to_string(oracle) + " vs " + std::to_string(via_norm);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 5
std::optional<std::string> criterion5_bound_values() {
  QuantizerBank wide = QuantizerBank::uniform(16, 800, 800, -1000, 1400);
  if (error_bound_equal_steps(wide) != 28800) return std::string("equal-steps bound is not 28800");
  if (error_bound_general(wide, 2048) != 28800) return std::string("general bound is not 28800");
  if (magnitude_via_error(2048, error_bound_general(wide, 2048)) != 30848)
    return std::string("error-route magnitude is not 30848");
  if (magnitude_theorem2(wide, 2048) != 8800) return std::string("count-route magnitude is not 8800");
  BigInt rz = magnitude_via_error(4096, error_bound_general(rz_bank(16), 4096));
  if (rz != 4112) return std::string("unit-quantizer magnitude is not 4112: ") + rz.str();
  BigRat planned = BigRat(3, 2) * BigRat(BigInt(1) << 15);
  if (denominator(planned) != 1 || bit_width(numerator(planned)) != 17)
    return std::string("bit width for 1.5·2^15 is not 17");
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 6
std::optional<std::string> criterion6_soundness() {
  auto start = Clock::now();
  SplitMix64 rng(60606);
  const int orders[3] = {2, 3, 4};  // exponents: n = 4, 8, 16
  HadamardMatrix bases[3] = {HadamardMatrix::sylvester(2), HadamardMatrix::sylvester(3),
                             HadamardMatrix::sylvester(4)};
  for (int trial = 0; trial < 10000; ++trial) {
    const int pick = static_cast<int>(rng.below(3));
    HadamardMatrix h = test::random_equivalent(rng, bases[pick]);
    const int n = h.order();
    Vec step(static_cast<size_t>(n)), recon(static_cast<size_t>(n)), dead(static_cast<size_t>(n)),
        off(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      step[static_cast<size_t>(i)] = rng.range(1, 4096);
      recon[static_cast<size_t>(i)] = rng.range(1, 4096);
      dead[static_cast<size_t>(i)] = rng.range(-4096, step[static_cast<size_t>(i)] - 1);
      off[static_cast<size_t>(i)] = rng.range(0, 4096);
    }
    QuantizerBank bank(step, recon, dead, off);
    Vec x = test::random_vec(rng, n, i64(1) << 15);
    PipelineTrace tr = run(h, bank, x);
    const BigInt xmax = linf(x);
    if (BigInt(tr.err_inf) > error_bound_general(bank, xmax))
      return "error bound violated at randomized trial " + std::to_string(trial);
    if (BigInt(linf(tr.x_prime)) > full_report(bank, xmax).mag_combined)
      return "magnitude bound violated at randomized trial " + std::to_string(trial);
    (void)orders;
  }

  // exhaustive order-4 sweep over a bank grid, bounds precomputed per xmax
  HadamardMatrix h4 = HadamardMatrix::sylvester(2);
  for (i64 step : {1, 2, 3})
    for (i64 recon : {1, 3})
      for (i64 dead : {-2, 0, 1})
        for (i64 off : {0, 2}) {
          if (dead > step - 1) continue;
          QuantizerBank bank = QuantizerBank::uniform(4, step, recon, dead, off);
          i64 err_table[13], mag_table[13];
          for (i64 m = 0; m <= 12; ++m) {
            err_table[m] = static_cast<i64>(error_bound_general(bank, m));
            mag_table[m] = static_cast<i64>(full_report(bank, m).mag_combined);
          }
          Vec x(4);
          for (x[0] = -12; x[0] <= 12; ++x[0])
            for (x[1] = -12; x[1] <= 12; ++x[1])
              for (x[2] = -12; x[2] <= 12; ++x[2])
                for (x[3] = -12; x[3] <= 12; ++x[3]) {
                  PipelineTrace tr = run(h4, bank, x);
                  const i64 m = linf(x);
                  if (tr.err_inf > err_table[m])
                    return "error bound violated in the exhaustive sweep";
                  if (linf(tr.x_prime) > mag_table[m])
                    return "magnitude bound violated in the exhaustive sweep";
                }
        }
  const double elapsed = ms_since(start);
  if (elapsed >= 60000.0)
    return "soundness suite took " + std::to_string(elapsed / 1000.0) + " s (budget 60 s)";
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 7
std::optional<std::string> criterion7_oracles() {
  SplitMix64 rng(70707);
  // butterfly vs dense multiply vs entry-formula oracle, n up to 32
  for (int k = 0; k <= 5; ++k) {
    HadamardMatrix h = HadamardMatrix::sylvester(k);
    for (int trial = 0; trial < 170; ++trial) {
      Vec x = test::random_vec(rng, h.order(), 1 << 20);
      Vec butterfly = fwht(x);
      if (butterfly != apply(h, x)) return "butterfly vs dense mismatch at order " + std::to_string(h.order());
      if (butterfly != test::dense_walsh_natural(x))
        return "butterfly vs entry-formula mismatch at order " + std::to_string(h.order());
    }
  }
  // Gray walk vs naive enumeration, 50 random ±1 matrices up to order 8
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    std::vector<Vec> rows(static_cast<size_t>(n), Vec(static_cast<size_t>(n)));
    for (auto& row : rows)
      for (auto& e : row) e = rng.below(2) ? 1 : -1;
    IntMatrix m = IntMatrix::from_rows(rows);
    if (norm_inf_1(m).value != test::naive_norm_inf_1(m))
      return "gray vs naive mismatch at trial " + std::to_string(trial);
  }
  // staircase vs composed quantizer on a dense rational grid
  for (int trial = 0; trial < 20; ++trial) {
    const i64 step = rng.range(1, 9);
    QuantizerBank bank = QuantizerBank::uniform(1, step, rng.range(1, 9), rng.range(-10, 10),
                                                rng.range(-10, 10));
    const i64 dead = bank.dead_off[0];
    const i64 reach = 3 * step + (dead < 0 ? -dead : dead);
    for (i64 den = 1; den <= 64; den *= 2)
      for (i64 num = -reach * den; num <= reach * den; ++num) {
        Ratio y(num, den);
        if (staircase(bank, 0, y) != iq(bank, 0, dq(bank, 0, y)))
          return "staircase mismatch at " + y.to_string();
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 8
std::optional<std::string> criterion8_sandwich() {
  for (int k : {2, 3, 4}) {
    HadamardMatrix h = HadamardMatrix::sylvester(k);
    const int n = h.order();
    const i64 sc = norm_inf_1(IntMatrix::from_hadamard(h)).value;
    if (!(best_lower(n) <= BigRat(sc)))
      return "best lower bound exceeds the class excess at order " + std::to_string(n);
    auto q1 = em_bound_q1(n), q2 = em_bound_q2(n);
    if (!q1 || !q2) return "expected both excess lower bounds at order " + std::to_string(n);
    if (!(*q1 <= BigRat(sc)) || !(*q2 <= BigRat(sc)))
      return "an excess lower bound exceeds the class excess at order " + std::to_string(n);
    if (!(BigInt(sc) * sc <= BigInt(n) * n * n))
      return "class excess above n^{3/2} at order " + std::to_string(n);
    // independent re-derivation of the bound sums
    if (*q1 != *test::em_q1_oracle(n) || *q2 != *test::em_q2_oracle(n))
      return "excess bound disagrees with the term-by-term oracle at order " + std::to_string(n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- criterion 9
std::optional<std::string> criterion9_recurrence() {
  for (int k = 0; k <= 3; ++k) {
    HadamardMatrix small = HadamardMatrix::sylvester(k);
    NormInf1Result base = norm_inf_1(IntMatrix::from_hadamard(small));
    const int n = small.order();
    // lift the witness as (x, x, −x, x)
    Vec lifted(static_cast<size_t>(4 * n));
    for (int i = 0; i < n; ++i) {
      const i64 s = base.witness.s[static_cast<size_t>(i)];
      lifted[static_cast<size_t>(i)] = s;
      lifted[static_cast<size_t>(n + i)] = s;
      lifted[static_cast<size_t>(2 * n + i)] = -s;
      lifted[static_cast<size_t>(3 * n + i)] = s;
    }
    Vec image = fwht(lifted);
    i64 l1 = 0;
    for (i64 v : image) l1 += v < 0 ? -v : v;
    if (l1 != 8 * base.value)
      return "lifted witness L1 at order " + std::to_string(4 * n) + " is " + std::to_string(l1) +
             ", want " + std::to_string(8 * base.value);
    if (4 * n <= 16) {
      const i64 big = norm_inf_1(IntMatrix::from_hadamard(HadamardMatrix::sylvester(k + 2))).value;
      if (big < 8 * base.value) return std::string("recurrence violated at order ") + std::to_string(4 * n);
    }
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long-run") == 0) long_run = true;

  std::vector<Criterion> criteria = {
      {"criterion 1  trace A: forward chain, anchors, sub-band relation, <1ms", false,
       criterion1_reproducible},
      {"criterion 1s trace A: final vector strict match vs archived listing", false,
       criterion1_strict},
      {"criterion 2  trace B: exact vectors, rendering, norm growth 4096->4097", false,
       criterion2_trace_b},
      {"criterion 3  induced norm table 1,2,8,20,64 (each <1s)", false, criterion3_norm_table},
      {"criterion 3L induced norm at order 32 equals 160", true, criterion3_norm32},
      {"criterion 4  class excess = induced norm (21 matrices/order, oracle at n<=4)", false,
       criterion4_excess_equality},
      {"criterion 5  bound values 28800/30848/8800/4112, bit width 17", false,
       criterion5_bound_values},
      {"criterion 6  soundness: 10000 randomized + exhaustive order-4 sweep (<60s)", false,
       criterion6_soundness},
      {"criterion 7  oracle equivalences: butterfly/dense, gray/naive, staircase", false,
       criterion7_oracles},
      {"criterion 8  bound sandwich + term-by-term re-derivation", false, criterion8_sandwich},
      {"criterion 9  doubling recurrence via witness lifting", false, criterion9_recurrence},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (c.long_run_only && !long_run) {
      std::cout << "[SKIP] " << c.name << " (pass --long-run)\n";
      continue;
    }
    auto start = Clock::now();
    std::optional<std::string> failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double elapsed = ms_since(start);
    if (failure) {
      ++failures;
      std::cout << "[FAIL] " << c.name << " — " << *failure << " (" << elapsed << " ms)\n";
    } else {
      std::cout << "[PASS] " << c.name << " (" << elapsed << " ms)\n";
    }
  }
  if (failures > 0)
    std::cout << failures << " criterion check(s) failed. The strict trace-A final-vector check "
                 "is expected to fail; see the header comment and the computed-inverse assertion "
                 "inside criterion 1.\n";
  return failures == 0 ? 0 : 1;
}
