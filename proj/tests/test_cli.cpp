#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "hadaq/io.hpp"
#include "reference_data.hpp"

using namespace hadaq;
using namespace hadaq::cli;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = fs::temp_directory_path() / ("hadaq_test_" + name);
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("matrix spec parsing") {
  CHECK(parse_matrix_spec("sylvester:3").order() == 8);
  CHECK(parse_matrix_spec("kron:sylvester:1xsylvester:2").order() == 8);
  CHECK(parse_matrix_spec("kron:kron:sylvester:1xsylvester:1xsylvester:1").order() == 8);
  CHECK(matrix_spec_order("sylvester:10") == 1024);
  CHECK(matrix_spec_order("kron:sylvester:2xsylvester:2") == 16);
  CHECK_THROWS_AS(parse_matrix_spec("sylvester:"), usage_error);
  CHECK_THROWS_AS(parse_matrix_spec("kron:sylvester:1"), usage_error);
  CHECK_THROWS_AS(parse_matrix_spec("sylvester:2trailing"), usage_error);
  CHECK_THROWS_AS(parse_matrix_spec("/nonexistent/matrix.txt"), usage_error);

  TempFile mfile("h2.txt", "1 1\n1 -1\n");
  CHECK(parse_matrix_spec(mfile.str()).order() == 2);
  TempFile bad("bad.txt", "1 1\n1 1\n");
  CHECK_THROWS_AS(parse_matrix_spec(bad.str()), domain_error);
}

TEST_CASE("vector file parsing") {
  TempFile text("vecs.txt", "1 2 3 4\n5 6 7 8\n");
  auto vecs = read_vectors_file(text.str());
  REQUIRE(vecs.size() == 2);
  CHECK(vecs[1] == Vec{5, 6, 7, 8});

  TempFile jsingle("v.json", "[1, -2, 3, -4]");
  CHECK(read_vectors_file(jsingle.str()) == std::vector<Vec>{{1, -2, 3, -4}});
  TempFile jbatch("vb.json", "[[1, 2], [3, 4]]");
  CHECK(read_vectors_file(jbatch.str()).size() == 2);

  TempFile empty("empty.txt", "  \n \n");
  CHECK_THROWS_AS(read_vectors_file(empty.str()), usage_error);
  TempFile junk("junk.txt", "1 two 3\n");
  CHECK_THROWS_AS(read_vectors_file(junk.str()), usage_error);
}

TEST_CASE("bank parsing") {
  QuantizerBank u = parse_bank(R"({"n":4,"uniform":{"Delta":800,"Gamma":800,"delta":-1000,"gamma":1400}})");
  CHECK(u.size() == 4);
  CHECK(u.step == Vec{800, 800, 800, 800});
  CHECK(u.dead_off == Vec{-1000, -1000, -1000, -1000});

  QuantizerBank v = parse_bank(R"({"n":2,"Delta":[1,2],"Gamma":[3,4],"delta":[0,-1],"gamma":[5,6]})");
  CHECK(v.recon == Vec{3, 4});
  CHECK_THROWS_AS(parse_bank(R"({"n":2,"Delta":[1],"Gamma":[3,4],"delta":[0,-1],"gamma":[5,6]})"),
                  usage_error);
  CHECK_THROWS_AS(parse_bank("{not json"), usage_error);
  CHECK_THROWS_AS(parse_bank("/nonexistent/bank.json"), usage_error);

  // round trip through the JSON text form
  CHECK(parse_bank(bank_to_json_text(v)).recon == v.recon);
}

TEST_CASE("transform command and scaling roundtrip") {
  TempFile vec("x.txt", "1 2 3 4\n");
  TransformArgs fwd{"sylvester:2", "fwd", vec.str(), false};
  CommandResult r = cmd_transform(fwd);
  CHECK(r.exit_code == 0);
  CHECK(r.payload["outputs"][0][0] == "2.5");  // (1+2+3+4)/4

  TransformArgs raw{"sylvester:2", "fwd", vec.str(), true};
  CommandResult rr = cmd_transform(raw);
  CHECK(rr.payload["outputs"][0] == nlohmann::json({10, -2, -4, 0}));

  // unscaled forward then inverse gives n·x
  TempFile mid("mid.txt", "10 -2 -4 0\n");
  TransformArgs inv{"sylvester:2", "inv", mid.str(), false};
  CommandResult ri = cmd_transform(inv);
  CHECK(ri.payload["outputs"][0] == nlohmann::json({4, 8, 12, 16}));

  TempFile empty("e.txt", "\n");
  CHECK(cmd_transform({"sylvester:2", "fwd", empty.str(), false}).exit_code == 2);
  CHECK(cmd_transform({"sylvester:2", "sideways", vec.str(), false}).exit_code == 2);
  CHECK(cmd_transform({"sylvester:2", "fwd", "/nonexistent", false}).exit_code == 2);
  TempFile shortvec("s.txt", "1 2\n");
  CHECK(cmd_transform({"sylvester:2", "fwd", shortvec.str(), false}).exit_code == 1);
}

TEST_CASE("pipeline command trace output") {
  std::string x_line;
  for (i64 v : ref::kBlockAX) x_line += std::to_string(v) + " ";
  TempFile vec("blocka.txt", x_line + "\n");
  PipelineArgs args{"sylvester:4", R"({"n":16,"uniform":{"Delta":1000,"Gamma":1000,"delta":0,"gamma":0}})",
                    vec.str(), 14};
  CommandResult r = cmd_pipeline(args);
  REQUIRE(r.exit_code == 0);
  const auto& tr = r.payload["traces"][0];
  CHECK(tr["errInf"] == 5984);
  CHECK(tr["xPrime"][0] == 10000);
  CHECK(tr["t1"][0] == "1001");
  CHECK(tr["exceedsWidth"]["x"] == false);        // 4016 fits 14 signed bits
  CHECK(tr["exceedsWidth"]["xPrime"] == true);    // 10000 does not fit 14 bits
  CHECK(tr["exceedsWidth"]["t1Numerators"] == true);
}

TEST_CASE("bounds command values and JSON round trip") {
  BoundsArgs args{"sylvester:4",
                  R"({"n":16,"uniform":{"Delta":800,"Gamma":800,"delta":-1000,"gamma":1400}})",
                  "2048"};
  CommandResult r = cmd_bounds(args);
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["errBoundGeneral"] == "28800");
  CHECK(r.payload["errBoundEqualSteps"] == "28800");
  CHECK(r.payload["magViaError"] == "30848");
  CHECK(r.payload["magTheorem2"] == "8800");
  CHECK(r.payload["magCombined"] == "8800");
  CHECK(r.payload["nonzeroBound"] == "4");
  CHECK(r.payload["bitWidth"] == 15);
  CHECK(cmd_bounds(args).payload == r.payload);  // identical on re-run

  BoundsArgs mismatch{"sylvester:2", args.bank, "10"};
  CHECK(cmd_bounds(mismatch).exit_code == 1);
  BoundsArgs badx{"sylvester:4", args.bank, "12x"};
  CHECK(cmd_bounds(badx).exit_code == 2);
}

TEST_CASE("norm command") {
  NormArgs args;
  args.matrix_spec = "sylvester:3";
  CommandResult r = cmd_norm(args);
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["value"] == "20");
  CHECK(r.payload["evaluated"] == "128");

  args.kind = "1";
  CHECK(cmd_norm(args).payload["value"] == "8");
  args.kind = "2";
  CHECK(cmd_norm(args).payload["value"] == "8");
  args.kind = "nope";
  CHECK(cmd_norm(args).exit_code == 2);

  NormArgs big;
  big.matrix_spec = "sylvester:5";
  CHECK(cmd_norm(big).exit_code == 1);  // refuses order 32 without long-run
}

TEST_CASE("excess command") {
  ExcessArgs args;
  args.matrix_spec = "sylvester:2";
  CommandResult r = cmd_excess(args);
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["sigma"] == "4");
  CHECK(r.payload["sigmaClass"] == "8");
  CHECK(r.payload["bestLower"] == "6");
  CHECK(r.payload["bestUpperSquared"] == "64");
  CHECK(r.payload["emLowerQ1"] == "8");
  CHECK(r.payload["rowSumBoundPrinted"] == "16");
  CHECK(r.payload["rowSumBoundReconstructed"] == "8");
}

TEST_CASE("search command") {
  TempFile seeds("seeds.txt", "55 -5 -5 -5 -4096 -5 -5 -4096 -5 -4096 -5 -4 -5 -2 -5 -4\n");
  SearchArgs args;
  args.matrix_spec = "sylvester:4";
  args.bank = R"({"n":16,"uniform":{"Delta":1,"Gamma":1,"delta":0,"gamma":0}})";
  args.objective = "magnitude";
  args.xmax = 4096;
  args.budget = 64;
  args.seed_file = seeds.str();
  CommandResult r = cmd_search(args);
  REQUIRE(r.exit_code == 0);
  CHECK(std::stoll(r.payload["bestValue"].get<std::string>()) >= 4097);

  args.objective = "sideways";
  CHECK(cmd_search(args).exit_code == 2);
}

TEST_CASE("verify command passes and reports tampering") {
  CommandResult ok = cmd_verify(false);
  CHECK(ok.exit_code == 0);
  CHECK(ok.payload["failed"] == 0);
  CHECK(ok.payload["skipped"] == 1);  // the order-32 item waits for --long-run
  bool has_skip = false;
  for (const auto& item : ok.payload["items"])
    if (item["name"] == "norm-order-32") has_skip = item["status"] == "skipped";
  CHECK(has_skip);

  // a tampered expectation must fail loudly, with the item named
  auto items = verify_items();
  items.push_back({"tampered-constant", false, []() -> std::optional<std::string> {
    BigInt got = error_bound_equal_steps(QuantizerBank::uniform(16, 800, 800, -1000, 1400));
    if (got != 28801) return "equal-steps bound: got " + got.str() + ", want 28801";
    return std::nullopt;
  }});
  CommandResult bad = run_verify(items, false);
  CHECK(bad.exit_code == 1);
  CHECK(bad.payload["failed"] == 1);
  bool named = false;
  for (const auto& item : bad.payload["items"])
    if (item["name"] == "tampered-constant") named = item["status"] == "fail";
  CHECK(named);
}

#ifdef HADAQ_BIN
TEST_CASE("binary exit codes") {
  const std::string bin = HADAQ_BIN;
  CHECK(std::system((bin + " verify > /dev/null").c_str()) == 0);
  int usage = std::system((bin + " transform --matrix sylvester:2 --dir sideways --in /dev/null"
                           " > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(usage) == 2);
  int unknown = std::system((bin + " frobnicate > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(unknown) != 0);
  int norm = std::system((bin + " norm --matrix sylvester:3 --json > /dev/null").c_str());
  CHECK(WEXITSTATUS(norm) == 0);
}
#endif
