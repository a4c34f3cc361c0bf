#include "commands.hpp"

#include <iostream>
#include <sstream>

#include "hadaq/bounds.hpp"
#include "hadaq/io.hpp"
#include "hadaq/norms.hpp"
#include "hadaq/pipeline.hpp"
#include "hadaq/search.hpp"

namespace hadaq::cli {

using nlohmann::json;

namespace {

json vec_json(const Vec& v) { return json(v); }

json rationals_json(const RationalVector& r) {
  json out = json::array();
  for (int i = 0; i < r.size(); ++i) out.push_back(r.at(i).to_string());
  return out;
}

std::string big_str(const BigInt& v) { return v.str(); }
std::string rat_str(const BigRat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<Vec> load_vectors(const std::string& input) {
  if (input == "-") return read_vectors(std::cin);
  return read_vectors_file(input);
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw usage_error("expected an integer");
  size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (start == text.size()) throw usage_error("expected an integer, got '" + text + "'");
  for (size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw usage_error("expected an integer, got '" + text + "'");
  return BigInt(text);
}

i64 spec_order(const std::string& spec) {
  try {
    return matrix_spec_order(spec);
  } catch (const usage_error&) {
    return parse_matrix_spec(spec).order();  // file path: must read it
  }
}

std::string join_line(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_line(const RationalVector& r) {
  std::string out;
  for (int i = 0; i < r.size(); ++i) {
    if (i) out.push_back(' ');
    out += r.at(i).to_string();
  }
  return out;
}

}  // namespace

CommandResult guarded(const std::function<CommandResult()>& fn) {
  try {
    return fn();
  } catch (const usage_error& e) {
    return CommandResult{2, json{{"error", e.what()}, {"kind", "usage"}},
                         std::string("usage error: ") + e.what()};
  } catch (const std::exception& e) {
    return CommandResult{1, json{{"error", e.what()}, {"kind", "domain"}},
                         std::string("error: ") + e.what()};
  }
}

CommandResult cmd_transform(const TransformArgs& args) {
  return guarded([&] {
    if (args.direction != "fwd" && args.direction != "inv")
      throw usage_error("--dir must be fwd or inv");
    HadamardMatrix h = parse_matrix_spec(args.matrix_spec);
    std::vector<Vec> inputs = load_vectors(args.input);
    CommandResult res;
    res.payload = json{{"command", "transform"},
                       {"matrix", args.matrix_spec},
                       {"order", h.order()},
                       {"direction", args.direction},
                       {"outputs", json::array()}};
    std::ostringstream human;
    for (const Vec& x : inputs) {
      if (args.direction == "fwd") {
        if (args.unscaled) {
          Vec out = h.is_sylvester() ? fwht(x) : hadaq::apply(h, x);
          res.payload["outputs"].push_back(vec_json(out));
          human << join_line(out) << '\n';
        } else {
          RationalVector out = dt(h, x);
          res.payload["outputs"].push_back(rationals_json(out));
          human << join_line(out) << '\n';
        }
      } else {
        Vec out = it(h, x);
        res.payload["outputs"].push_back(vec_json(out));
        human << join_line(out) << '\n';
      }
    }
    res.human = human.str();
    return res;
  });
}

namespace {

json width_overflows(const PipelineTrace& tr, int width) {
  const i64 lo = width >= 64 ? std::numeric_limits<i64>::min() : -(i64(1) << (width - 1));
  const i64 hi = width >= 64 ? std::numeric_limits<i64>::max() : (i64(1) << (width - 1)) - 1;
  auto fits = [&](const Vec& v) {
    for (i64 e : v)
      if (e < lo || e > hi) return false;
    return true;
  };
  json out = json::object();
  out["x"] = !fits(tr.x);
  out["t1Numerators"] = !fits(tr.t1.num);
  out["t2"] = !fits(tr.t2);
  out["t3"] = !fits(tr.t3);
  out["xPrime"] = !fits(tr.x_prime);
  return out;
}

}  // namespace

CommandResult cmd_pipeline(const PipelineArgs& args) {
  return guarded([&] {
    HadamardMatrix h = parse_matrix_spec(args.matrix_spec);
    QuantizerBank bank = parse_bank(args.bank);
    std::vector<Vec> inputs = load_vectors(args.input);
    CommandResult res;
    res.payload = json{{"command", "pipeline"},
                       {"matrix", args.matrix_spec},
                       {"order", h.order()},
                       {"traces", json::array()}};
    std::ostringstream human;
    for (const Vec& x : inputs) {
      PipelineTrace tr = run(h, bank, x);
      json t{{"x", vec_json(tr.x)},
             {"t1", rationals_json(tr.t1)},
             {"t2", vec_json(tr.t2)},
             {"t3", vec_json(tr.t3)},
             {"xPrime", vec_json(tr.x_prime)},
             {"errInf", tr.err_inf},
             {"quantErr", rationals_json(tr.quant_err)}};
      if (args.register_width > 0) {
        t["registerWidth"] = args.register_width;
        t["exceedsWidth"] = width_overflows(tr, args.register_width);
      }
      res.payload["traces"].push_back(std::move(t));
      human << "x      : " << join_line(tr.x) << '\n'
            << "t1     : " << join_line(tr.t1) << '\n'
            << "t2     : " << join_line(tr.t2) << '\n'
            << "t3     : " << join_line(tr.t3) << '\n'
            << "x'     : " << join_line(tr.x_prime) << '\n'
            << "errInf : " << tr.err_inf << '\n';
    }
    res.human = human.str();
    return res;
  });
}

CommandResult cmd_bounds(const BoundsArgs& args) {
  return guarded([&] {
    const i64 n = spec_order(args.matrix_spec);
    QuantizerBank bank = parse_bank(args.bank);
    if (bank.size() != n)
      throw domain_error("bank size " + std::to_string(bank.size()) +
                         " does not match matrix order " + std::to_string(n));
    const BigInt xmax = parse_bigint(args.xmax);
    BoundReport rep = full_report(bank, xmax);
    BigRat rel = relative_error_coefficient(bank);

    CommandResult res;
    res.payload = json{{"command", "bounds"},
                       {"order", n},
                       {"xmaxIn", big_str(rep.xmax_in)},
                       {"errBoundGeneral", big_str(rep.err_bound_general)},
                       {"errBoundEqualSteps", rep.err_bound_equal_steps
                                                  ? json(big_str(*rep.err_bound_equal_steps))
                                                  : json(nullptr)},
                       {"magViaError", big_str(rep.mag_via_error)},
                       {"magTheorem2",
                        rep.mag_theorem2 ? json(big_str(*rep.mag_theorem2)) : json(nullptr)},
                       {"magCombined", big_str(rep.mag_combined)},
                       {"nonzeroBound",
                        rep.nonzero_bound ? json(big_str(*rep.nonzero_bound)) : json(nullptr)},
                       {"bitWidth", rep.bit_width},
                       {"relativeErrorCoefficient", rat_str(rel)}};
    std::ostringstream human;
    human << "order                 : " << n << '\n'
          << "xmax                  : " << big_str(rep.xmax_in) << '\n'
          << "error bound (general) : " << big_str(rep.err_bound_general) << '\n';
    if (rep.err_bound_equal_steps)
      human << "error bound (eq.step) : " << big_str(*rep.err_bound_equal_steps) << '\n';
    human << "magnitude via error   : " << big_str(rep.mag_via_error) << '\n';
    if (rep.mag_theorem2)
      human << "magnitude via count   : " << big_str(*rep.mag_theorem2) << '\n';
    human << "magnitude combined    : " << big_str(rep.mag_combined) << '\n';
    if (rep.nonzero_bound)
      human << "nonzero outputs bound : " << big_str(*rep.nonzero_bound) << '\n';
    human << "bit width             : " << rep.bit_width << '\n'
          << "rel. error coefficient: " << rat_str(rel) << '\n';
    res.human = human.str();
    return res;
  });
}

CommandResult cmd_norm(const NormArgs& args) {
  return guarded([&] {
    HadamardMatrix h = parse_matrix_spec(args.matrix_spec);
    CommandResult res;
    std::ostringstream human;
    if (args.kind == "inf1") {
      NormRunConfig cfg;
      cfg.long_run = args.long_run;
      cfg.threads = args.threads;
      NormInf1Result r = norm_inf_1(IntMatrix::from_hadamard(h), cfg);
      res.payload = json{{"command", "norm"},
                         {"kind", "inf1"},
                         {"order", h.order()},
                         {"value", std::to_string(r.value)},
                         {"witness", r.witness.to_string()},
                         {"evaluated", std::to_string(r.evaluated)},
                         {"upperBoundSquared", big_str(norm_inf_1_upper_squared(h.order()))}};
      human << "|A|_{inf,1}  : " << r.value << '\n'
            << "witness      : " << r.witness.to_string() << '\n'
            << "evaluated    : " << r.evaluated << '\n';
    } else {
      IntMatrix m = IntMatrix::from_hadamard(h);
      i64 value;
      if (args.kind == "1")
        value = matrix_norm_1(m);
      else if (args.kind == "inf")
        value = matrix_norm_inf(m);
      else if (args.kind == "1inf")
        value = matrix_norm_1_inf(m);
      else if (args.kind == "2")
        value = matrix_norm_2_squared_hadamard(h);
      else
        throw usage_error("--kind must be one of inf1, 1, inf, 1inf, 2");
      res.payload = json{{"command", "norm"},
                         {"kind", args.kind},
                         {"order", h.order()},
                         {"value", std::to_string(value)}};
      if (args.kind == "2") res.payload["valueIsSquared"] = true;
      human << "|A|_" << args.kind << (args.kind == "2" ? " squared" : "") << " : " << value
            << '\n';
    }
    res.human = human.str();
    return res;
  });
}

CommandResult cmd_excess(const ExcessArgs& args) {
  return guarded([&] {
    HadamardMatrix h = parse_matrix_spec(args.matrix_spec);
    NormRunConfig cfg;
    cfg.long_run = args.long_run;
    cfg.threads = args.threads;
    ExcessReport rep = excess_report(h, cfg);

    CommandResult res;
    res.payload = json{
        {"command", "excess"},
        {"order", h.order()},
        {"sigma", std::to_string(rep.sigma)},
        {"sigmaClass", std::to_string(rep.sigma_class)},
        {"witnessRows", rep.witness_rows.to_string()},
        {"witnessCols", rep.witness_cols.to_string()},
        {"evaluated", std::to_string(rep.evaluated)},
        {"bestLower", rat_str(rep.best_lower_bound)},
        {"bestUpperSquared", big_str(rep.best_upper_squared_bound)},
        {"emLowerQ1", rep.em_q1 ? json(rat_str(*rep.em_q1)) : json(nullptr)},
        {"emLowerQ2", rep.em_q2 ? json(rat_str(*rep.em_q2)) : json(nullptr)},
        {"rowSumBoundPrinted", big_str(rep.row_sum_printed)},
        {"rowSumBoundReconstructed",
         rep.row_sum_reconstructed ? json(big_str(*rep.row_sum_reconstructed)) : json(nullptr)}};
    std::ostringstream human;
    human << "excess sigma          : " << rep.sigma << '\n'
          << "maximal class excess  : " << rep.sigma_class << '\n'
          << "best lower bound      : " << rat_str(rep.best_lower_bound) << '\n'
          << "upper bound (squared) : " << big_str(rep.best_upper_squared_bound) << '\n';
    if (rep.em_q1) human << "EM lower bound Q1     : " << rat_str(*rep.em_q1) << '\n';
    if (rep.em_q2) human << "EM lower bound Q2     : " << rat_str(*rep.em_q2) << '\n';
    human << "row-sum bound (printed reconstruction) : " << big_str(rep.row_sum_printed) << '\n';
    if (rep.row_sum_reconstructed)
      human << "row-sum bound (squared reconstruction) : " << big_str(*rep.row_sum_reconstructed)
            << '\n';
    res.human = human.str();
    return res;
  });
}

CommandResult cmd_search(const SearchArgs& args) {
  return guarded([&] {
    HadamardMatrix h = parse_matrix_spec(args.matrix_spec);
    QuantizerBank bank = parse_bank(args.bank);
    SearchConfig cfg;
    cfg.xmax = args.xmax;
    cfg.budget = args.budget;
    cfg.seed = args.seed;
    cfg.strategy = strategy_from_name(args.strategy);
    cfg.threads = args.threads;
    if (!args.seed_file.empty()) cfg.seeds = read_vectors_file(args.seed_file);

    SearchOutcome out;
    if (args.objective == "error")
      out = worst_error(h, bank, cfg);
    else if (args.objective == "magnitude")
      out = worst_magnitude(h, bank, cfg);
    else
      throw usage_error("--objective must be error or magnitude");

    CommandResult res;
    res.payload = json{{"command", "search"},
                       {"objective", args.objective},
                       {"strategy", args.strategy},
                       {"bestX", vec_json(out.best_x)},
                       {"bestValue", std::to_string(out.best_value)},
                       {"bound", big_str(out.bound)},
                       {"tightness", rat_str(out.tightness)},
                       {"evaluated", std::to_string(out.evaluated)}};
    std::ostringstream human;
    human << "best value : " << out.best_value << '\n'
          << "bound      : " << big_str(out.bound) << '\n'
          << "tightness  : " << rat_str(out.tightness) << '\n'
          << "best x     : " << join_line(out.best_x) << '\n'
          << "evaluated  : " << out.evaluated << '\n';
    res.human = human.str();
    return res;
  });
}

CommandResult run_verify(const std::vector<VerifyItem>& items, bool long_run) {
  CommandResult res;
  res.payload = json{{"command", "verify"}, {"items", json::array()}};
  std::ostringstream human;
  int passed = 0, failed = 0, skipped = 0;
  for (const VerifyItem& item : items) {
    if (item.long_run_only && !long_run) {
      ++skipped;
      res.payload["items"].push_back(json{{"name", item.name}, {"status", "skipped"}});
      human << "[SKIP] " << item.name << " (long-run)\n";
      continue;
    }
    std::optional<std::string> failure;
    try {
      failure = item.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++failed;
      res.payload["items"].push_back(
          json{{"name", item.name}, {"status", "fail"}, {"detail", *failure}});
      human << "[FAIL] " << item.name << ": " << *failure << '\n';
    } else {
      ++passed;
      res.payload["items"].push_back(json{{"name", item.name}, {"status", "pass"}});
      human << "[PASS] " << item.name << '\n';
    }
  }
  res.payload["passed"] = passed;
  res.payload["failed"] = failed;
  res.payload["skipped"] = skipped;
  human << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  res.human = human.str();
  res.exit_code = failed > 0 ? 1 : 0;
  return res;
}

CommandResult cmd_verify(bool long_run) { return run_verify(verify_items(), long_run); }

}  // namespace hadaq::cli
