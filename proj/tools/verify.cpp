#include <sstream>

#include "commands.hpp"
#include "hadaq/bounds.hpp"
#include "hadaq/norms.hpp"
#include "hadaq/pipeline.hpp"
#include "reference_data.hpp"

namespace hadaq::cli {

namespace {

std::optional<std::string> expect_vec(const char* what, const Vec& got, const Vec& want) {
  if (got == want) return std::nullopt;
  std::ostringstream os;
  os << what << " mismatch:";
  for (size_t i = 0; i < std::min(got.size(), want.size()); ++i)
    if (got[i] != want[i]) {
      os << " [" << i << "] got " << got[i] << " want " << want[i];
      break;
    }
  if (got.size() != want.size()) os << " (length " << got.size() << " vs " << want.size() << ")";
  return os.str();
}

template <typename T>
std::optional<std::string> expect_eq(const char* what, const T& got, const T& want) {
  if (got == want) return std::nullopt;
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

QuantizerBank section3_bank() { return QuantizerBank::uniform(16, 800, 800, -1000, 1400); }

}  // namespace

std::vector<VerifyItem> verify_items() {
  std::vector<VerifyItem> items;

  items.push_back({"trace-a-forward-chain", false, []() -> std::optional<std::string> {
    HadamardMatrix h = ref::subband_order_16();
    QuantizerBank bank = QuantizerBank::uniform(16, 1000, 1000, 0, 0);
    PipelineTrace tr = run(h, bank, ref::to_vec(ref::kBlockAX));
    if (auto d = expect_vec("t1 numerators", tr.t1.num, ref::to_vec(ref::kBlockAT1Num))) return d;
    if (auto d = expect_eq("t1 denominator", tr.t1.den, i64{16})) return d;
    if (auto d = expect_vec("t2", tr.t2, ref::to_vec(ref::kBlockAT2))) return d;
    if (auto d = expect_vec("t3", tr.t3, ref::to_vec(ref::kBlockAT3))) return d;
    return std::nullopt;
  }});

  items.push_back({"trace-a-error-anchors", false, []() -> std::optional<std::string> {
    HadamardMatrix h = ref::subband_order_16();
    QuantizerBank bank = QuantizerBank::uniform(16, 1000, 1000, 0, 0);
    PipelineTrace tr = run(h, bank, ref::to_vec(ref::kBlockAX));
    if (auto d = expect_eq("x' first component", tr.x_prime[0], i64{10000})) return d;
    if (auto d = expect_eq("errInf", tr.err_inf, ref::kBlockAErrInf)) return d;
    if (auto d = expect_vec("x'", tr.x_prime, ref::to_vec(ref::kBlockAXPrime))) return d;
    return std::nullopt;
  }});

  items.push_back({"trace-b-exact", false, []() -> std::optional<std::string> {
    HadamardMatrix h = ref::subband_order_16();
    QuantizerBank bank = QuantizerBank::uniform(16, 1, 1, 0, 0);
    PipelineTrace tr = run(h, bank, ref::to_vec(ref::kBlockBX));
    if (auto d = expect_vec("t1 numerators", tr.t1.num, ref::to_vec(ref::kBlockBT1Num))) return d;
    for (int i = 0; i < 16; ++i)
      if (auto d = expect_eq("t1 rendering", tr.t1.at(i).to_string(),
                             std::string(ref::kBlockBT1Text[static_cast<size_t>(i)])))
        return d;
    if (auto d = expect_vec("t2", tr.t2, ref::to_vec(ref::kBlockBT2))) return d;
    if (auto d = expect_vec("x'", tr.x_prime, ref::to_vec(ref::kBlockBXPrime))) return d;
    if (auto d = expect_eq("|x|_inf", linf(tr.x), i64{4096})) return d;
    if (auto d = expect_eq("|x'|_inf", linf(tr.x_prime), i64{4097})) return d;
    return std::nullopt;
  }});

  items.push_back({"error-bound-28800", false, []() -> std::optional<std::string> {
    if (auto d = expect_eq("equal-steps bound", error_bound_equal_steps(section3_bank()).str(),
                           std::string("28800")))
      return d;
    if (auto d = expect_eq("general bound at 2048",
                           error_bound_general(section3_bank(), 2048).str(),
                           std::string("28800")))
      return d;
    return std::nullopt;
  }});

  items.push_back({"magnitude-error-route-30848", false, []() -> std::optional<std::string> {
    BigInt mag = magnitude_via_error(2048, error_bound_general(section3_bank(), 2048));
    return expect_eq("xmax + error bound", mag.str(), std::string("30848"));
  }});

  items.push_back({"magnitude-count-route-8800", false, []() -> std::optional<std::string> {
    if (auto d = expect_eq("count-route bound", magnitude_theorem2(section3_bank(), 2048).str(),
                           std::string("8800")))
      return d;
    BoundReport rep = full_report(section3_bank(), 2048);
    if (auto d = expect_eq("combined bound", rep.mag_combined.str(), std::string("8800")))
      return d;
    if (auto d = expect_eq("nonzero-count bound", nonzero_count_bound(section3_bank(), 2048).str(),
                           std::string("4")))
      return d;
    return std::nullopt;
  }});

  items.push_back({"round-toward-zero-4112", false, []() -> std::optional<std::string> {
    QuantizerBank rz = QuantizerBank::uniform(16, 1, 1, 0, 0);
    BigInt err = error_bound_general(rz, 4096);
    if (auto d = expect_eq("error bound", err.str(), std::string("16"))) return d;
    return expect_eq("magnitude", magnitude_via_error(4096, err).str(), std::string("4112"));
  }});

  items.push_back({"bit-width-17", false, []() -> std::optional<std::string> {
    // |x'| ≤ (3/2)·2^15 → magnitude 49152 → 17 signed bits
    BigRat m = BigRat(3, 2) * BigRat(BigInt(1) << 15);
    if (denominator(m) != 1) return std::string("expected an integer magnitude");
    return expect_eq("bit width", bit_width(numerator(m)), 17);
  }});

  items.push_back({"norm-table-small", false, []() -> std::optional<std::string> {
    const i64 want[5] = {1, 2, 8, 20, 64};
    for (int k = 0; k <= 4; ++k) {
      NormInf1Result r = norm_inf_1(IntMatrix::from_hadamard(HadamardMatrix::sylvester(k)));
      if (r.value != want[k])
        return "k=" + std::to_string(k) + ": got " + std::to_string(r.value) + ", want " +
               std::to_string(want[k]);
    }
    return std::nullopt;
  }});

  items.push_back({"norm-order-32", true, []() -> std::optional<std::string> {
    NormRunConfig cfg;
    cfg.long_run = true;
    NormInf1Result r = norm_inf_1(IntMatrix::from_hadamard(HadamardMatrix::sylvester(5)), cfg);
    return expect_eq("norm of order 32", r.value, i64{160});
  }});

  items.push_back({"excess-equals-norm-small", false, []() -> std::optional<std::string> {
    for (int k = 0; k <= 3; ++k) {
      HadamardMatrix h = HadamardMatrix::sylvester(k);
      i64 via_norm = max_excess_class(h).value;
      i64 via_signs = max_excess_sign_enum(h).value;
      if (via_norm != via_signs)
        return "k=" + std::to_string(k) + ": norm route " + std::to_string(via_norm) +
               " vs sign route " + std::to_string(via_signs);
    }
    return std::nullopt;
  }});

  items.push_back({"excess-order-4", false, []() -> std::optional<std::string> {
    HadamardMatrix h4 = HadamardMatrix::sylvester(2);
    if (auto d = expect_eq("sigma", excess(h4), i64{4})) return d;
    return expect_eq("sigma of the class", max_excess_class(h4).value, i64{8});
  }});

  items.push_back({"mass-bound-64000", false, []() -> std::optional<std::string> {
    NormInf1Result r = norm_inf_1(IntMatrix::from_hadamard(HadamardMatrix::sylvester(4)));
    i64 cap = r.value * 1000;  // ‖Hx‖₁ ≤ ‖H‖∞,1·‖x‖∞
    if (auto d = expect_eq("L1 mass cap", cap, i64{64000})) return d;
    if (7 * 10000 <= cap) return std::string("seven large components should exceed the mass cap");
    return std::nullopt;
  }});

  return items;
}

}  // namespace hadaq::cli
