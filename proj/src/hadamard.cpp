#include "hadaq/hadamard.hpp"

#include <algorithm>
#include <bit>

namespace hadaq {

SignVector::SignVector(std::vector<std::int8_t> v) : s(std::move(v)) {
  for (auto e : s)
    if (e != 1 && e != -1) throw domain_error("sign vector entry must be -1 or +1");
}

SignVector SignVector::all_plus(int n) {
  SignVector v;
  v.s.assign(static_cast<size_t>(n), 1);
  return v;
}

std::string SignVector::to_string() const {
  std::string out;
  out.reserve(s.size());
  for (auto e : s) out.push_back(e > 0 ? '+' : '-');
  return out;
}

SignVector SignVector::from_string(const std::string& text) {
  std::vector<std::int8_t> v;
  v.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      v.push_back(1);
    else if (c == '-')
      v.push_back(-1);
    else
      throw usage_error("sign string may contain only '+' and '-'");
  }
  return SignVector(std::move(v));
}

Permutation::Permutation(std::vector<std::int32_t> v) : idx(std::move(v)) {
  std::vector<bool> seen(idx.size(), false);
  for (auto i : idx) {
    if (i < 0 || static_cast<size_t>(i) >= idx.size() || seen[static_cast<size_t>(i)])
      throw domain_error("permutation is not a bijection");
    seen[static_cast<size_t>(i)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::int32_t> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return Permutation(std::move(v));
}

HadamardMatrix HadamardMatrix::sylvester(int k, const SizeLimits& limits) {
  if (k < 0) throw domain_error("sylvester order exponent must be nonnegative");
  if (k > limits.max_sylvester_k)
    throw size_limit_error("sylvester order 2^" + std::to_string(k) + " exceeds the configured cap");
  const i64 n = i64(1) << k;
  std::vector<std::int8_t> e(static_cast<size_t>(n) * static_cast<size_t>(n), 1);
  // H_{2m} = H_2 ⊗ H_m, grown in place: the three copied blocks are H_m and
  // the bottom-right block is −H_m.
  for (i64 m = 1; m < n; m <<= 1) {
    for (i64 i = 0; i < m; ++i) {
      for (i64 j = 0; j < m; ++j) {
        std::int8_t v = e[static_cast<size_t>(i * n + j)];
        e[static_cast<size_t>(i * n + (j + m))] = v;
        e[static_cast<size_t>((i + m) * n + j)] = v;
        e[static_cast<size_t>((i + m) * n + (j + m))] = static_cast<std::int8_t>(-v);
      }
    }
  }
  return HadamardMatrix(static_cast<int>(n), Provenance::sylvester, k, std::move(e));
}

HadamardMatrix HadamardMatrix::kronecker(const HadamardMatrix& a, const HadamardMatrix& b,
                                         const SizeLimits& limits) {
  const i64 na = a.order(), nb = b.order();
  if (na * nb > limits.max_order)
    throw size_limit_error("kronecker product order exceeds the configured cap");
  const i64 n = na * nb;
  std::vector<std::int8_t> e(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (i64 i1 = 0; i1 < na; ++i1)
    for (i64 i2 = 0; i2 < nb; ++i2)
      for (i64 j1 = 0; j1 < na; ++j1)
        for (i64 j2 = 0; j2 < nb; ++j2)
          e[static_cast<size_t>((i1 * nb + i2) * n + (j1 * nb + j2))] =
              static_cast<std::int8_t>(a.at(static_cast<int>(i1), static_cast<int>(j1)) *
                                       b.at(static_cast<int>(i2), static_cast<int>(j2)));
  // Sylvester ⊗ Sylvester is Sylvester again (associativity of ⊗ on H_2 powers).
  if (a.is_sylvester() && b.is_sylvester())
    return HadamardMatrix(static_cast<int>(n), Provenance::sylvester,
                          a.sylvester_k() + b.sylvester_k(), std::move(e));
  return HadamardMatrix(static_cast<int>(n), Provenance::kronecker, -1, std::move(e));
}

HadamardMatrix HadamardMatrix::validate(const std::vector<Vec>& m, const SizeLimits& limits) {
  const size_t n = m.size();
  if (n == 0) throw domain_error("empty matrix");
  if (static_cast<i64>(n) > limits.max_order)
    throw size_limit_error("matrix order exceeds the configured cap");
  for (const auto& row : m)
    if (row.size() != n) throw domain_error("matrix is not square");
  if (n > 2 && n % 4 != 0)
    throw domain_error("Hadamard order must be 1, 2, or a multiple of 4, got " + std::to_string(n));
  std::vector<std::int8_t> e(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (m[i][j] != 1 && m[i][j] != -1)
        throw domain_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is not -1 or +1");
      e[i * n + j] = static_cast<std::int8_t>(m[i][j]);
    }
  // HᵀH = nI ⟺ all row pairs orthogonal (rows have squared norm n already).
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      i64 dot = 0;
      for (size_t c = 0; c < n; ++c) dot += i64(e[i * n + c]) * e[j * n + c];
      if (dot != 0)
        throw domain_error("rows " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not orthogonal");
    }
  return HadamardMatrix(static_cast<int>(n), Provenance::explicit_matrix, -1, std::move(e));
}

i64 HadamardMatrix::row_sum(int i) const {
  i64 s = 0;
  for (auto v : row(i)) s += v;
  return s;
}

i64 HadamardMatrix::entry_sum() const {
  i64 s = 0;
  for (auto v : e_) s += v;
  return s;
}

Vec fwht(Vec x) {
  const size_t n = x.size();
  if (n == 0 || !std::has_single_bit(n))
    throw domain_error("fwht length must be a power of two, got " + std::to_string(n));
  for (size_t len = 1; len < n; len <<= 1) {
    for (size_t i = 0; i < n; i += len << 1) {
      for (size_t j = i; j < i + len; ++j) {
        i64 a = x[j], b = x[j + len];
        x[j] = checked_add(a, b);
        x[j + len] = checked_sub(a, b);
      }
    }
  }
  return x;
}

namespace {

Vec dense_product(const HadamardMatrix& h, std::span<const i64> x, bool transpose) {
  const int n = h.order();
  if (static_cast<int>(x.size()) != n)
    throw domain_error("vector length " + std::to_string(x.size()) + " does not match order " +
                       std::to_string(n));
  Vec out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    i128 acc = 0;  // |acc| ≤ n·max|x| < 2^84, no per-step check needed
    for (int j = 0; j < n; ++j) acc += i128(transpose ? h.at(j, i) : h.at(i, j)) * x[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = narrow_i128(acc);
  }
  return out;
}

}  // namespace

Vec apply(const HadamardMatrix& h, std::span<const i64> x) { return dense_product(h, x, false); }

Vec apply_transpose(const HadamardMatrix& h, std::span<const i64> x) {
  return dense_product(h, x, true);
}

HadamardMatrix equivalence_transform(const HadamardMatrix& h, const Permutation& row_perm,
                                     const SignVector& row_signs, const Permutation& col_perm,
                                     const SignVector& col_signs) {
  const int n = h.order();
  if (row_perm.size() != n || col_perm.size() != n || row_signs.size() != n ||
      col_signs.size() != n)
    throw domain_error("equivalence transform arguments must all have length " + std::to_string(n));
  std::vector<Vec> m(static_cast<size_t>(n), Vec(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const int src_row = row_perm[i];
    for (int j = 0; j < n; ++j) {
      const int src_col = col_perm[j];
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          i64(row_signs.s[static_cast<size_t>(src_row)]) * h.at(src_row, src_col) *
          col_signs.s[static_cast<size_t>(src_col)];
    }
  }
  SizeLimits no_cap;
  no_cap.max_order = n;
  return HadamardMatrix::validate(m, no_cap);
}

}  // namespace hadaq
