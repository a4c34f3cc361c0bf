#include "hadaq/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hadaq/bounds.hpp"
#include "hadaq/rng.hpp"

namespace hadaq {

SearchStrategy strategy_from_name(const std::string& name) {
  if (name == "random") return SearchStrategy::random;
  if (name == "coordinate-ascent") return SearchStrategy::coordinate_ascent;
  if (name == "exhaustive") return SearchStrategy::exhaustive;
  throw usage_error("unknown search strategy '" + name + "'");
}

std::string strategy_name(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::random: return "random";
    case SearchStrategy::coordinate_ascent: return "coordinate-ascent";
    case SearchStrategy::exhaustive: return "exhaustive";
  }
  throw domain_error("invalid strategy");
}

namespace {

struct Candidate {
  Vec x;
  i64 value = -1;
  std::uint64_t evaluated = 0;

  void offer(const Vec& x_new, i64 v) {
    if (v > value || (v == value && value >= 0 &&
                      std::lexicographical_compare(x_new.begin(), x_new.end(), x.begin(), x.end()))) {
      x = x_new;
      value = v;
    }
  }
  void merge(const Candidate& other) {
    evaluated += other.evaluated;
    if (other.value > value ||
        (other.value == value && value >= 0 &&
         std::lexicographical_compare(other.x.begin(), other.x.end(), x.begin(), x.end())))
      { x = other.x; value = other.value; }
  }
};

struct Objective {
  const HadamardMatrix& h;
  const QuantizerBank& bank;
  bool magnitude;  // false → error objective
  BigInt bound;

  i64 eval(const Vec& x) const {
    PipelineTrace tr = run(h, bank, x);
    i64 v = magnitude ? linf(tr.x_prime) : tr.err_inf;
    if (BigInt(v) > bound)
      throw domain_error("bound soundness violated during search: observed " + std::to_string(v));
    return v;
  }
};

Vec random_point(SplitMix64& rng, int n, i64 xmax) {
  Vec x(static_cast<size_t>(n));
  for (auto& v : x) v = rng.range(-xmax, xmax);
  return x;
}

Candidate run_random_chunk(const Objective& obj, int n, i64 xmax, std::uint64_t seed,
                           std::uint64_t chunk_index, std::uint64_t count) {
  SplitMix64 rng = SplitMix64::stream(seed, chunk_index);
  Candidate best;
  for (std::uint64_t it = 0; it < count; ++it) {
    Vec x = random_point(rng, n, xmax);
    best.offer(x, obj.eval(x));
    ++best.evaluated;
  }
  return best;
}

Candidate run_ascent_restart(const Objective& obj, const QuantizerBank& bank, int n, i64 xmax,
                             std::uint64_t seed, std::uint64_t restart, std::uint64_t eval_cap) {
  SplitMix64 rng = SplitMix64::stream(seed, restart);
  Candidate best;
  if (eval_cap == 0) return best;
  Vec x = random_point(rng, n, xmax);
  i64 value = obj.eval(x);
  ++best.evaluated;
  best.offer(x, value);
  bool improved = true;
  while (improved && best.evaluated < eval_cap) {
    improved = false;
    for (int i = 0; i < n && best.evaluated < eval_cap; ++i) {
      // unit moves plus stepwidth-scale moves, per channel
      const i64 scale = bank.step[static_cast<size_t>(i)];
      i64 deltas[4] = {1, -1, scale, -scale};
      const int n_deltas = scale == 1 ? 2 : 4;
      for (int di = 0; di < n_deltas; ++di) {
        const i64 trial = x[static_cast<size_t>(i)] + deltas[di];
        if (trial < -xmax || trial > xmax) continue;
        Vec x_new = x;
        x_new[static_cast<size_t>(i)] = trial;
        i64 v = obj.eval(x_new);
        ++best.evaluated;
        best.offer(x_new, v);
        if (v > value) {
          x = std::move(x_new);
          value = v;
          improved = true;
          break;
        }
        if (best.evaluated >= eval_cap) break;
      }
    }
  }
  return best;
}

Candidate run_exhaustive(const Objective& obj, int n, i64 xmax, std::uint64_t cap) {
  BigInt states = 1;
  for (int i = 0; i < n; ++i) states *= 2 * BigInt(xmax) + 1;
  if (states > cap)
    throw size_limit_error("exhaustive search space " + states.str() +
                           " exceeds the cap of " + std::to_string(cap));
  Candidate best;
  Vec x(static_cast<size_t>(n), -xmax);
  for (;;) {
    best.offer(x, obj.eval(x));  // ascending lexicographic order keeps the smallest maximizer
    ++best.evaluated;
    int i = n - 1;
    while (i >= 0 && x[static_cast<size_t>(i)] == xmax) x[static_cast<size_t>(i--)] = -xmax;
    if (i < 0) break;
    ++x[static_cast<size_t>(i)];
  }
  return best;
}

template <typename Job>
Candidate parallel_reduce(std::uint64_t jobs, int threads, Job&& job) {
  std::vector<Candidate> results(jobs);
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : 1;
  workers = std::min<std::uint64_t>(workers, jobs);
  if (workers <= 1) {
    for (std::uint64_t j = 0; j < jobs; ++j) results[j] = job(j);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (;;) {
        std::uint64_t j = next.fetch_add(1);
        if (j >= jobs) return;
        results[j] = job(j);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  Candidate best;
  for (const auto& r : results) best.merge(r);
  return best;
}

SearchOutcome search(const HadamardMatrix& h, const QuantizerBank& bank, const SearchConfig& cfg,
                     bool magnitude) {
  const int n = h.order();
  if (bank.size() != n) throw domain_error("bank size does not match matrix order");
  if (cfg.xmax < 0) throw domain_error("xmax must be nonnegative");

  Objective obj{h, bank, magnitude, 0};
  if (magnitude) {
    obj.bound = full_report(bank, BigInt(cfg.xmax)).mag_combined;
  } else {
    obj.bound = error_bound_general(bank, BigInt(cfg.xmax));
  }

  Candidate best;
  for (const Vec& s : cfg.seeds) {
    if (static_cast<int>(s.size()) != n) throw domain_error("seed vector length mismatch");
    if (linf(s) > cfg.xmax) throw domain_error("seed vector exceeds the xmax box");
    best.offer(s, obj.eval(s));
    ++best.evaluated;
  }

  switch (cfg.strategy) {
    case SearchStrategy::random: {
      const std::uint64_t chunks = 16;
      best.merge(parallel_reduce(chunks, cfg.threads, [&](std::uint64_t c) {
        std::uint64_t count = cfg.budget / chunks + (c < cfg.budget % chunks ? 1 : 0);
        return run_random_chunk(obj, n, cfg.xmax, cfg.seed, c, count);
      }));
      break;
    }
    case SearchStrategy::coordinate_ascent: {
      const std::uint64_t per_restart = std::max<std::uint64_t>(128 * static_cast<std::uint64_t>(n), 256);
      const std::uint64_t restarts = std::max<std::uint64_t>(1, (cfg.budget + per_restart - 1) / per_restart);
      best.merge(parallel_reduce(restarts, cfg.threads, [&](std::uint64_t r) {
        std::uint64_t cap = std::min(per_restart, cfg.budget - std::min(cfg.budget, r * per_restart));
        return run_ascent_restart(obj, bank, n, cfg.xmax, cfg.seed, r, cap);
      }));
      break;
    }
    case SearchStrategy::exhaustive:
      best.merge(run_exhaustive(obj, n, cfg.xmax, cfg.exhaustive_cap));
      break;
  }

  SearchOutcome out;
  out.best_x = best.value >= 0 ? best.x : Vec(static_cast<size_t>(n), 0);
  out.best_value = std::max<i64>(best.value, 0);
  out.bound = obj.bound;
  out.evaluated = best.evaluated;
  out.tightness = obj.bound == 0 ? BigRat(0) : BigRat(BigInt(out.best_value), obj.bound);
  return out;
}

}  // namespace

SearchOutcome worst_error(const HadamardMatrix& h, const QuantizerBank& bank,
                          const SearchConfig& cfg) {
  return search(h, bank, cfg, false);
}

SearchOutcome worst_magnitude(const HadamardMatrix& h, const QuantizerBank& bank,
                              const SearchConfig& cfg) {
  return search(h, bank, cfg, true);
}

}  // namespace hadaq
