#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadaq/bigint.hpp"
#include "hadaq/hadamard.hpp"
#include "hadaq/pipeline.hpp"

namespace hadaq {

enum class SearchStrategy { random, coordinate_ascent, exhaustive };

SearchStrategy strategy_from_name(const std::string& name);
std::string strategy_name(SearchStrategy s);

// Worst-case input search over the box ‖x‖∞ ≤ xmax. Deterministic for a
// fixed config: streams are split from the seed per chunk/restart and the
// reduction ignores scheduling order (max value, then lexicographically
// smallest x).
struct SearchConfig {
  i64 xmax = 0;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  SearchStrategy strategy = SearchStrategy::random;
  std::vector<Vec> seeds;  // optional starting candidates, evaluated first
  std::uint64_t exhaustive_cap = std::uint64_t(1) << 24;
  int threads = 1;
};

struct SearchOutcome {
  Vec best_x;
  i64 best_value = 0;
  BigInt bound;       // matching closed-form bound for the same box
  BigRat tightness;   // best_value / bound, exact (0 when the bound is 0)
  std::uint64_t evaluated = 0;
};

// Maximize ‖x′ − x‖∞; every evaluation is checked against the Theorem-1
// bound and a violation aborts with a diagnostic.
SearchOutcome worst_error(const HadamardMatrix& h, const QuantizerBank& bank,
                          const SearchConfig& cfg);

// Maximize ‖x′‖∞ against the combined magnitude bound.
SearchOutcome worst_magnitude(const HadamardMatrix& h, const QuantizerBank& bank,
                              const SearchConfig& cfg);

}  // namespace hadaq
