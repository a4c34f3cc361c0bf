#include "hadaq/pipeline.hpp"

#include <algorithm>

namespace hadaq {

std::vector<Ratio> RationalVector::ratios() const {
  std::vector<Ratio> out;
  out.reserve(num.size());
  for (i64 v : num) out.emplace_back(v, den);
  return out;
}

bool RationalVector::is_zero() const {
  return std::all_of(num.begin(), num.end(), [](i64 v) { return v == 0; });
}

RationalVector dt(const HadamardMatrix& h, const Vec& x) {
  if (static_cast<int>(x.size()) != h.order())
    throw domain_error("vector length does not match matrix order");
  Vec num = h.is_sylvester() ? fwht(x) : hadaq::apply(h, x);
  return RationalVector(std::move(num), h.order());
}

Vec it(const HadamardMatrix& h, const Vec& z) { return apply_transpose(h, z); }

i64 linf(const Vec& v) {
  i64 m = 0;
  for (i64 e : v) m = std::max(m, e < 0 ? -e : e);
  return m;
}

PipelineTrace run(const HadamardMatrix& h, const QuantizerBank& bank, const Vec& x) {
  const int n = h.order();
  if (bank.size() != n) throw domain_error("bank size does not match matrix order");
  PipelineTrace tr;
  tr.x = x;
  tr.t1 = dt(h, x);
  tr.t2 = dq_vec(bank, tr.t1.ratios());
  tr.t3 = iq_vec(bank, tr.t2);
  tr.x_prime = it(h, tr.t3);

  Vec err_num(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    err_num[static_cast<size_t>(i)] =
        checked_sub(checked_mul(tr.t3[static_cast<size_t>(i)], tr.t1.den),
                    tr.t1.num[static_cast<size_t>(i)]);
  tr.quant_err = RationalVector(std::move(err_num), tr.t1.den);

  i64 m = 0;
  for (int i = 0; i < n; ++i) {
    i64 d = checked_sub(tr.x_prime[static_cast<size_t>(i)], x[static_cast<size_t>(i)]);
    m = std::max(m, d < 0 ? -d : d);
  }
  tr.err_inf = m;
  return tr;
}

}  // namespace hadaq
