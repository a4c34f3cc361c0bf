#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hadaq/hadamard.hpp"
#include "hadaq/quantizer.hpp"

namespace hadaq::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error.
struct CommandResult {
  int exit_code = 0;
  nlohmann::json payload;
  std::string human;
};

struct TransformArgs {
  std::string matrix_spec;
  std::string direction;  // "fwd" | "inv"
  std::string input;      // vector file path, or "-" for stdin
  bool unscaled = false;  // fwd only: emit Hx without the 1/n scale
};

struct PipelineArgs {
  std::string matrix_spec;
  std::string bank;  // inline JSON or path
  std::string input;
  int register_width = 0;  // if > 0, flag intermediates outside this signed width
};

struct BoundsArgs {
  std::string matrix_spec;
  std::string bank;
  std::string xmax;  // decimal integer, may exceed 64 bits
};

struct NormArgs {
  std::string matrix_spec;
  std::string kind = "inf1";  // inf1 | 1 | inf | 1inf | 2
  bool long_run = false;
  int threads = 0;
};

struct ExcessArgs {
  std::string matrix_spec;
  bool long_run = false;
  int threads = 0;
};

struct SearchArgs {
  std::string matrix_spec;
  std::string bank;
  std::string objective = "error";  // error | magnitude
  i64 xmax = 0;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  std::string strategy = "random";
  std::string seed_file;  // optional vectors evaluated first
  int threads = 1;
};

CommandResult cmd_transform(const TransformArgs& args);
CommandResult cmd_pipeline(const PipelineArgs& args);
CommandResult cmd_bounds(const BoundsArgs& args);
CommandResult cmd_norm(const NormArgs& args);
CommandResult cmd_excess(const ExcessArgs& args);
CommandResult cmd_search(const SearchArgs& args);

// Regression items behind `verify`. Each item returns std::nullopt on pass
// or a short diff message on failure.
struct VerifyItem {
  std::string name;
  bool long_run_only = false;
  std::function<std::optional<std::string>()> check;
};

std::vector<VerifyItem> verify_items();
CommandResult run_verify(const std::vector<VerifyItem>& items, bool long_run);
CommandResult cmd_verify(bool long_run);

// Maps thrown errors onto the result contract.
CommandResult guarded(const std::function<CommandResult()>& fn);

}  // namespace hadaq::cli
