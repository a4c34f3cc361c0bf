#include "hadaq/norms.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace hadaq {

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& m) {
  IntMatrix out;
  out.rows = static_cast<int>(m.size());
  out.cols = out.rows == 0 ? 0 : static_cast<int>(m[0].size());
  out.a.reserve(static_cast<size_t>(out.rows) * out.cols);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != out.cols) throw domain_error("ragged matrix");
    out.a.insert(out.a.end(), row.begin(), row.end());
  }
  return out;
}

IntMatrix IntMatrix::from_hadamard(const HadamardMatrix& h) {
  IntMatrix out;
  out.rows = out.cols = h.order();
  out.a.reserve(static_cast<size_t>(out.rows) * out.cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) out.a.push_back(h.at(i, j));
  return out;
}

VecNorms vec_norms(std::span<const Ratio> x) {
  VecNorms n;
  for (const Ratio& r : x) {
    BigRat v(BigInt(r.num), BigInt(r.den));
    BigRat av = v < 0 ? BigRat(-v) : v;
    n.l1 += av;
    n.l2_squared += v * v;
    n.linf = std::max(n.linf, av);
  }
  return n;
}

namespace {

i64 abs64(i64 v) { return v < 0 ? -v : v; }

}  // namespace

i64 matrix_norm_1(const IntMatrix& m) {
  i64 best = 0;
  for (int j = 0; j < m.cols; ++j) {
    i128 s = 0;
    for (int i = 0; i < m.rows; ++i) s += abs64(m.at(i, j));
    best = std::max(best, narrow_i128(s));
  }
  return best;
}

i64 matrix_norm_inf(const IntMatrix& m) {
  i64 best = 0;
  for (int i = 0; i < m.rows; ++i) {
    i128 s = 0;
    for (int j = 0; j < m.cols; ++j) s += abs64(m.at(i, j));
    best = std::max(best, narrow_i128(s));
  }
  return best;
}

i64 matrix_norm_1_inf(const IntMatrix& m) {
  i64 best = 0;
  for (i64 v : m.a) best = std::max(best, abs64(v));
  return best;
}

i64 matrix_norm_2_squared_hadamard(const HadamardMatrix& h) { return h.order(); }

namespace {

constexpr i64 kMaxNormEntry = i64(1) << 48;

struct BlockResult {
  i64 value = -1;
  std::uint64_t first_index = 0;  // Gray index of the first maximizer
};

// Walk Gray indices [t_begin, t_end) over m free sign bits (coordinate j+1
// flips with bit j), maintaining z = A·x and Σ|z| incrementally.
BlockResult walk_block(const IntMatrix& a, std::uint64_t t_begin, std::uint64_t t_end) {
  const int rows = a.rows;
  const int cols = a.cols;
  std::uint64_t gray = t_begin ^ (t_begin >> 1);
  std::vector<i64> z(static_cast<size_t>(rows), 0);
  for (int j = 0; j < cols; ++j) {
    const i64 sign = (j > 0 && (gray >> (j - 1)) & 1) ? -1 : 1;
    for (int i = 0; i < rows; ++i) z[static_cast<size_t>(i)] += sign * a.at(i, j);
  }
  i64 l1 = 0;
  for (i64 v : z) l1 += abs64(v);

  BlockResult best{l1, t_begin};
  for (std::uint64_t t = t_begin + 1; t < t_end; ++t) {
    const int bit = std::countr_zero(t);
    const std::uint64_t next_gray = t ^ (t >> 1);
    // flip coordinate bit+1: new sign −1 if the gray bit is now set
    const i64 delta = ((next_gray >> bit) & 1) ? -2 : 2;
    gray = next_gray;
    const int j = bit + 1;
    for (int i = 0; i < rows; ++i) {
      i64& zi = z[static_cast<size_t>(i)];
      const i64 before = abs64(zi);
      zi += delta * a.at(i, j);
      l1 += abs64(zi) - before;
    }
    if (l1 > best.value) best = BlockResult{l1, t};
  }
  return best;
}

SignVector witness_from_index(int n, std::uint64_t t) {
  std::uint64_t gray = t ^ (t >> 1);
  std::vector<std::int8_t> s(static_cast<size_t>(n), 1);
  for (int j = 1; j < n; ++j)
    if ((gray >> (j - 1)) & 1) s[static_cast<size_t>(j)] = -1;
  return SignVector(std::move(s));
}

}  // namespace

NormInf1Result norm_inf_1(const IntMatrix& m, const NormRunConfig& cfg) {
  if (m.rows == 0 || m.rows != m.cols) throw domain_error("norm enumeration needs a square matrix");
  const int n = m.rows;
  const int effective_cap = cfg.long_run ? 32 : std::min(cfg.cap, 32);
  if (n > effective_cap)
    throw size_limit_error("order " + std::to_string(n) + " exceeds the enumeration cap of " +
                           std::to_string(effective_cap) +
                           (cfg.long_run ? "" : " (pass the long-run flag for n up to 32)"));
  if (matrix_norm_1_inf(m) > kMaxNormEntry)
    throw overflow_error("matrix entries too large for exact 64-bit enumeration");

  const int free_bits = n - 1;  // ‖A(−x)‖₁ = ‖Ax‖₁, so pin x₁ = +1
  const std::uint64_t total = std::uint64_t(1) << free_bits;

  // Fixed block structure, independent of the worker count, so the reduction
  // (and therefore the reported witness) is deterministic.
  const int block_bits = free_bits >= 20 ? 6 : 0;
  const std::uint64_t n_blocks = std::uint64_t(1) << block_bits;
  const std::uint64_t per_block = total >> block_bits;

  std::vector<BlockResult> results(n_blocks);
  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n_blocks));

  if (workers <= 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b)
      results[b] = walk_block(m, b * per_block, (b + 1) * per_block);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::uint64_t b = next.fetch_add(1);
        if (b >= n_blocks) return;
        results[b] = walk_block(m, b * per_block, (b + 1) * per_block);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BlockResult best = results[0];
  for (std::uint64_t b = 1; b < n_blocks; ++b)
    if (results[b].value > best.value) best = results[b];

  NormInf1Result out;
  out.value = best.value;
  out.witness = witness_from_index(n, best.first_index);
  out.evaluated = total;
  return out;
}

BigInt norm_inf_1_upper_squared(int n) {
  if (n < 0) throw domain_error("order must be nonnegative");
  return BigInt(n) * n * n;
}

BigInt sylvester_lower_squared(int k) {
  if (k < 0) throw domain_error("exponent must be nonnegative");
  if (k % 2 == 0) return BigInt(1) << (3 * k);       // (8^{k/2})²
  if (k >= 3) return BigInt(25) << (3 * k - 5);      // ((5√2/8)·8^{k/2})²
  return 4;                                          // k = 1, enumerated directly
}

i64 excess(const HadamardMatrix& h) { return h.entry_sum(); }

NormInf1Result max_excess_class(const HadamardMatrix& h, const NormRunConfig& cfg) {
  return norm_inf_1(IntMatrix::from_hadamard(h), cfg);
}

MaxExcessResult max_excess_sign_enum(const HadamardMatrix& h, int cap) {
  const int n = h.order();
  if (n > cap || n > 30)
    throw size_limit_error("sign enumeration cap exceeded for order " + std::to_string(n));
  const std::uint64_t total = std::uint64_t(1) << (n - 1);  // negating both sign sets is value-neutral
  MaxExcessResult best;
  best.value = -1;
  best.evaluated = total;
  std::vector<std::int8_t> x(static_cast<size_t>(n));
  std::vector<std::int8_t> y(static_cast<size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    x[0] = 1;
    for (int j = 1; j < n; ++j) x[static_cast<size_t>(j)] = ((code >> (j - 1)) & 1) ? -1 : 1;
    i64 value = 0;
    for (int i = 0; i < n; ++i) {
      i64 row_dot = 0;
      for (int j = 0; j < n; ++j) row_dot += i64(h.at(i, j)) * x[static_cast<size_t>(j)];
      y[static_cast<size_t>(i)] = static_cast<std::int8_t>(sign_select(row_dot));
      value += i64(y[static_cast<size_t>(i)]) * row_dot;  // = Σ_i |row·x|
    }
    if (value > best.value) {
      best.value = value;
      best.row_signs = SignVector(y);
      best.col_signs = SignVector(x);
    }
  }
  return best;
}

BigRat best_lower(int n) {
  if (n < 1) throw domain_error("order must be positive");
  return BigRat(BigInt(n) * n * binomial(n, n / 2), BigInt(1) << n);
}

BigInt best_upper_squared(int n) { return norm_inf_1_upper_squared(n); }

BigInt row_sum_bound_printed(int n) { return BigInt(n) * n; }

std::optional<BigInt> row_sum_bound_reconstructed(int n) {
  if (n % 4 != 0 || n == 0) return std::nullopt;
  const i64 budget = i64(n) * n;  // Σ sᵢ² = n²
  i64 best = -1;
  for (int residue = 0; residue <= 2; residue += 2) {
    Vec values;
    for (i64 v = residue == 0 ? 0 : 2; v <= n; v += 4) values.push_back(v);
    // dp[q] = max sum over exactly `i` values with squares summing to q
    const i64 kImpossible = -1;
    std::vector<i64> dp(static_cast<size_t>(budget) + 1, kImpossible);
    dp[0] = 0;
    for (int i = 0; i < n; ++i) {
      std::vector<i64> next(static_cast<size_t>(budget) + 1, kImpossible);
      for (i64 q = 0; q <= budget; ++q) {
        if (dp[static_cast<size_t>(q)] == kImpossible) continue;
        for (i64 v : values) {
          i64 nq = q + v * v;
          if (nq > budget) break;
          next[static_cast<size_t>(nq)] =
              std::max(next[static_cast<size_t>(nq)], dp[static_cast<size_t>(q)] + v);
        }
      }
      dp.swap(next);
    }
    if (dp[static_cast<size_t>(budget)] != kImpossible)
      best = std::max(best, dp[static_cast<size_t>(budget)]);
  }
  if (best < 0) return std::nullopt;
  return BigInt(best);
}

std::optional<BigRat> em_bound_q1(int n) {
  if (n % 4 != 0 || n == 0) return std::nullopt;
  std::optional<BigRat> best;
  for (int m = 1; m <= n; ++m) {
    BigInt p1;
    if (m % 2 == 1) {
      BigInt c = binomial(n / 2 - 1, (m - 1) / 2);
      p1 = BigInt(n) * c * c;
    } else {
      BigInt c1 = binomial(n / 2, m / 2);
      BigInt c2 = binomial(n / 2 - 1, m / 2 - 1);
      p1 = BigInt(m) * c1 * c1 - BigInt(n) * c2 * c2;
    }
    BigRat q = BigRat(abs_big(BigInt(n) - 2 * m)) +
               BigRat(BigInt(2) * (n - 1) * p1, binomial(n, m));
    if (!best || q > *best) best = q;
  }
  return best;
}

std::optional<BigRat> em_bound_q2(int n) {
  if (n % 4 != 0 || n == 0) return std::nullopt;
  const int quarter = n / 4;
  std::optional<BigRat> best;
  for (int m = 1; m <= n; m += 2) {
    if (4 * m < n || 4 * m > 3 * n) continue;
    BigInt p2 = 0;
    for (int j = 0; j <= m - quarter; ++j) {
      BigInt c = binomial(quarter - 1, (m - 1) / 2 - j);
      p2 += c * c * binomial(quarter, j) * binomial(quarter, m - quarter - j);
    }
    for (int j = 0; j <= m - quarter - 1; ++j) {
      BigInt c = binomial(quarter, (m - 1) / 2 - j);
      p2 += c * c * binomial(quarter - 1, j) * binomial(quarter - 1, m - quarter - j - 1);
    }
    BigInt denom = binomial(n / 2, quarter) * binomial(n / 2, m - quarter);
    BigRat q = BigRat(abs_big(BigInt(2) * n - 4 * m)) +
               BigRat(BigInt(n) * (n - 2) * p2, denom);
    if (!best || q > *best) best = q;
  }
  return best;
}

ExcessReport excess_report(const HadamardMatrix& h, const NormRunConfig& cfg) {
  const int n = h.order();
  ExcessReport rep;
  rep.sigma = excess(h);
  NormInf1Result norm = max_excess_class(h, cfg);
  rep.sigma_class = norm.value;
  rep.witness_cols = norm.witness;
  std::vector<std::int8_t> row_signs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    i64 dot = 0;
    for (int j = 0; j < n; ++j) dot += i64(h.at(i, j)) * norm.witness.s[static_cast<size_t>(j)];
    row_signs[static_cast<size_t>(i)] = static_cast<std::int8_t>(sign_select(dot));
  }
  rep.witness_rows = SignVector(std::move(row_signs));
  rep.evaluated = norm.evaluated;
  rep.best_lower_bound = best_lower(n);
  rep.best_upper_squared_bound = best_upper_squared(n);
  rep.em_q1 = em_bound_q1(n);
  rep.em_q2 = em_bound_q2(n);
  rep.row_sum_printed = row_sum_bound_printed(n);
  rep.row_sum_reconstructed = row_sum_bound_reconstructed(n);
  return rep;
}

}  // namespace hadaq
