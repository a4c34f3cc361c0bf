#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hadaq/checked_int.hpp"
#include "hadaq/error.hpp"

namespace hadaq {

using Vec = std::vector<i64>;

// ±1 vector, used both as a transform input restricted to signs and as the
// witness of the induced (inf,1) norm.
struct SignVector {
  std::vector<std::int8_t> s;  // each entry −1 or +1

  SignVector() = default;
  explicit SignVector(std::vector<std::int8_t> v);
  static SignVector all_plus(int n);

  int size() const { return static_cast<int>(s.size()); }
  // rendered as "+-++..." for reports
  std::string to_string() const;
  static SignVector from_string(const std::string& text);
};

// Index array validated as a bijection on construction.
struct Permutation {
  std::vector<std::int32_t> idx;

  Permutation() = default;
  explicit Permutation(std::vector<std::int32_t> v);
  static Permutation identity(int n);
  int size() const { return static_cast<int>(idx.size()); }
  std::int32_t operator[](int i) const { return idx[i]; }
};

struct SizeLimits {
  int max_sylvester_k = 20;       // transform orders up to 2^20
  i64 max_order = i64(1) << 20;   // kronecker results, file matrices
};

enum class Provenance { sylvester, kronecker, explicit_matrix };

// ±1 square matrix with exactly orthogonal rows (HᵀH = nI, checked in
// integer arithmetic). Immutable after construction.
class HadamardMatrix {
 public:
  static HadamardMatrix sylvester(int k, const SizeLimits& limits = {});
  static HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b,
                                  const SizeLimits& limits = {});
  // Accepts an arbitrary integer matrix; throws domain_error with the first
  // offending entry or row pair if it is not Hadamard.
  static HadamardMatrix validate(const std::vector<Vec>& m, const SizeLimits& limits = {});

  int order() const { return n_; }
  std::int8_t at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  std::span<const std::int8_t> row(int i) const {
    return {e_.data() + static_cast<size_t>(i) * n_, static_cast<size_t>(n_)};
  }
  Provenance provenance() const { return prov_; }
  int sylvester_k() const { return k_; }  // −1 unless provenance is sylvester
  bool is_sylvester() const { return prov_ == Provenance::sylvester; }

  i64 row_sum(int i) const;
  i64 entry_sum() const;

 private:
  HadamardMatrix(int n, Provenance p, int k, std::vector<std::int8_t> e)
      : n_(n), prov_(p), k_(k), e_(std::move(e)) {}

  int n_ = 0;
  Provenance prov_ = Provenance::explicit_matrix;
  int k_ = -1;
  std::vector<std::int8_t> e_;
};

// In-place butterfly Walsh–Hadamard transform; equals sylvester(k)·x exactly
// for length 2^k. Additions/subtractions only, overflow-checked.
Vec fwht(Vec x);

// Dense products, exact. apply = H·x, apply_transpose = Hᵀ·x.
Vec apply(const HadamardMatrix& h, std::span<const i64> x);
Vec apply_transpose(const HadamardMatrix& h, std::span<const i64> x);

// P₁D₁HD₂P₂: row/column permutation and negation. The result is Hadamard
// again and carries explicit provenance.
HadamardMatrix equivalence_transform(const HadamardMatrix& h, const Permutation& row_perm,
                                     const SignVector& row_signs, const Permutation& col_perm,
                                     const SignVector& col_signs);

}  // namespace hadaq
