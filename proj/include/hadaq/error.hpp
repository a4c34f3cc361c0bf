#pragma once

#include <stdexcept>
#include <string>

namespace hadaq {

// Bad command-line usage or malformed input files (CLI exit code 2).
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition or structural check (CLI exit code 1).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A constructed matrix or search space exceeds the configured cap.
struct size_limit_error : domain_error {
  explicit size_limit_error(const std::string& what) : domain_error(what) {}
};

// An exact integer result does not fit the 64-bit vector element type.
struct overflow_error : domain_error {
  explicit overflow_error(const std::string& what) : domain_error(what) {}
};

}  // namespace hadaq
