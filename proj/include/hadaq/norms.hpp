#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hadaq/bigint.hpp"
#include "hadaq/hadamard.hpp"
#include "hadaq/ratio.hpp"

namespace hadaq {

// Row-major integer matrix for the norm engines (they accept arbitrary
// integer matrices, not just Hadamard ones).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<i64> a;

  static IntMatrix from_rows(const std::vector<Vec>& m);
  static IntMatrix from_hadamard(const HadamardMatrix& h);
  i64 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct VecNorms {
  BigRat l1;
  BigRat l2_squared;  // kept squared so everything stays rational
  BigRat linf;
};

VecNorms vec_norms(std::span<const Ratio> x);

i64 matrix_norm_1(const IntMatrix& m);      // max column abs sum
i64 matrix_norm_inf(const IntMatrix& m);    // max row abs sum
i64 matrix_norm_1_inf(const IntMatrix& m);  // max |a_ij|

// ‖H‖₂² = n exactly (every eigenvalue of HᵀH equals n).
i64 matrix_norm_2_squared_hadamard(const HadamardMatrix& h);

struct NormRunConfig {
  int cap = 28;           // enumeration refuses orders above this…
  bool long_run = false;  // …unless explicitly unlocked (hard limit 32)
  int threads = 0;        // 0 = hardware concurrency
};

struct NormInf1Result {
  i64 value = 0;
  SignVector witness;        // first maximizer in Gray order, first entry +1
  std::uint64_t evaluated = 0;  // sign vectors examined (2^{n−1})
};

// Exact ‖A‖∞,1 = max ‖Ax‖₁ over x ∈ {−1,1}^n by Gray-code enumeration with
// incremental column updates. Internally parallel over fixed index blocks;
// value and witness are independent of the worker count.
NormInf1Result norm_inf_1(const IntMatrix& m, const NormRunConfig& cfg = {});

BigInt norm_inf_1_upper_squared(int n);  // (n^{3/2})² = n³ for Hadamard A

// Exact lower bound for ‖H_{2^k}‖∞,1, squared: 8^k for even k,
// 25·2^{3k−5} for odd k ≥ 3, and the directly enumerated base 4 at k = 1.
BigInt sylvester_lower_squared(int k);

i64 excess(const HadamardMatrix& h);  // Σ_ij h_ij

// Maximal excess of the equivalence class; equals norm_inf_1 by the
// row/column sign argument.
NormInf1Result max_excess_class(const HadamardMatrix& h, const NormRunConfig& cfg = {});

// Independent route: enumerate column signs, pick row signs by
// s(row·x) with s(0)=+1, and take the excess of the resulting signed matrix.
struct MaxExcessResult {
  i64 value = 0;
  SignVector row_signs;
  SignVector col_signs;
  std::uint64_t evaluated = 0;
};
MaxExcessResult max_excess_sign_enum(const HadamardMatrix& h, int cap = 16);

// s from the sign-selection argument: +1 on nonnegative input. Distinct from
// the quantizer sign, which sends 0 to 0.
inline int sign_select(i64 v) { return v >= 0 ? 1 : -1; }

BigRat best_lower(int n);         // (n²/2ⁿ)·C(n, ⌊n/2⌋)
BigInt best_upper_squared(int n);  // n³

// The literal printed row-sum bound (its constraint pins the value at n²)…
BigInt row_sum_bound_printed(int n);
// …and the squared-constraint reconstruction max{Σsᵢ : Σsᵢ² = n², sᵢ even,
// sᵢ ≡ sⱼ mod 4}, solved exactly by dynamic programming. Only defined for
// n ≡ 0 (mod 4), where the constraints actually hold for row sums.
std::optional<BigInt> row_sum_bound_reconstructed(int n);

// Enomoto–Miyamoto lower bounds, exact rationals; absent unless n ≡ 0 (mod 4).
std::optional<BigRat> em_bound_q1(int n);
std::optional<BigRat> em_bound_q2(int n);

struct ExcessReport {
  i64 sigma = 0;
  i64 sigma_class = 0;
  SignVector witness_rows;
  SignVector witness_cols;
  std::uint64_t evaluated = 0;
  BigRat best_lower_bound;
  BigInt best_upper_squared_bound;
  std::optional<BigRat> em_q1;
  std::optional<BigRat> em_q2;
  BigInt row_sum_printed;
  std::optional<BigInt> row_sum_reconstructed;
};

ExcessReport excess_report(const HadamardMatrix& h, const NormRunConfig& cfg = {});

}  // namespace hadaq
