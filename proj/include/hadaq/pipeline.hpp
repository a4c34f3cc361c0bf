#pragma once

#include <vector>

#include "hadaq/hadamard.hpp"
#include "hadaq/quantizer.hpp"
#include "hadaq/ratio.hpp"

namespace hadaq {

// Integer-numerator vector over one fixed positive denominator. The forward
// transform emits numerators Hx over denominator n, unreduced, so printed
// traces are reproducible digit-for-digit.
struct RationalVector {
  Vec num;
  i64 den = 1;

  RationalVector() = default;
  RationalVector(Vec numerators, i64 denominator) : num(std::move(numerators)), den(denominator) {
    if (den < 1) throw domain_error("denominator must be positive");
  }

  int size() const { return static_cast<int>(num.size()); }
  Ratio at(int i) const { return Ratio(num[static_cast<size_t>(i)], den); }
  std::vector<Ratio> ratios() const;
  bool is_zero() const;
};

// Full capture of one x′ = IT(IQ(DQ(DT(x)))) evaluation.
struct PipelineTrace {
  Vec x;
  RationalVector t1;       // DT(x) = (1/n)Hx
  Vec t2;                  // DQ(t1)
  Vec t3;                  // IQ(t2)
  Vec x_prime;             // IT(t3) = Hᵀt3
  i64 err_inf = 0;         // ‖x′ − x‖∞
  RationalVector quant_err;  // E(y) = IQ(DQ(y)) − y, over denominator n
};

// (1/n)Hx exactly; routes through the butterfly transform when H carries
// Sylvester provenance.
RationalVector dt(const HadamardMatrix& h, const Vec& x);

// Hᵀz exactly.
Vec it(const HadamardMatrix& h, const Vec& z);

PipelineTrace run(const HadamardMatrix& h, const QuantizerBank& bank, const Vec& x);

i64 linf(const Vec& v);

}  // namespace hadaq
