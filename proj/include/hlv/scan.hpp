#pragma once

// Parallel evaluation of check suites over prime ranges.
//
// Work is split by prime; each worker owns its Workspace. Results are merged
// in prime order and sorted by (check id, params) within a prime, so the
// output is identical for any thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hlv/checks.hpp"
#include "hlv/primes.hpp"

namespace hlv {

enum class Suite { theorems, lemmas, identities, conjectures, all };

inline Suite parse_suite(std::string_view s) {
  if (s == "theorems") return Suite::theorems;
  if (s == "lemmas") return Suite::lemmas;
  if (s == "identities") return Suite::identities;
  if (s == "conjectures") return Suite::conjectures;
  if (s == "all") return Suite::all;
  throw UsageError("unknown suite: " + std::string(s));
}

inline bool in_suite(CheckKind k, Suite s) {
  switch (s) {
    case Suite::theorems: return k == CheckKind::theorem || k == CheckKind::corollary;
    case Suite::lemmas: return k == CheckKind::lemma;
    case Suite::identities: return k == CheckKind::identity;
    case Suite::conjectures: return k == CheckKind::conjecture;
    case Suite::all: return true;
  }
  return false;
}

inline std::vector<const CheckInfo*> suite_checks(Suite s) {
  std::vector<const CheckInfo*> out;
  for (const auto& c : catalog())
    if (in_suite(c.kind, s)) out.push_back(&c);
  return out;
}

/// How (A, B) and n are chosen for parameterized checks.
struct ParamPlan {
  enum class Mode { defaults, grid, random };
  Mode mode = Mode::defaults;
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::int64_t bound = 50;
  std::vector<std::int64_t> n_list{0, 1, 2, 3};
  // Explicit values from the command line. When A or B is set it replaces
  // the pair list; b is passed to checks that take a square root of B.
  std::optional<std::int64_t> A, B, b;
};

/// count pairs with |A|, |B| <= bound from a seeded 64-bit Mersenne twister.
inline std::vector<std::pair<std::int64_t, std::int64_t>> random_pairs(std::uint64_t seed, std::size_t count,
                                                                      std::int64_t bound) {
  std::mt19937_64 rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto a = static_cast<std::int64_t>(rng() % width) - bound;
    const auto b = static_cast<std::int64_t>(rng() % width) - bound;
    out.emplace_back(a, b);
  }
  return out;
}

inline std::vector<Params> param_sets(const CheckInfo& info, const ParamPlan& plan) {
  using Pair = std::pair<std::int64_t, std::int64_t>;
  const bool with_n = info.shape == ParamShape::n || info.shape == ParamShape::pair_n;
  if (plan.A || plan.B) {
    std::vector<Params> out;
    if (!with_n) return {{plan.A, plan.B, std::nullopt, plan.b}};
    for (auto n : plan.n_list) out.push_back({plan.A, plan.B, n, plan.b});
    return out;
  }
  std::vector<Pair> pairs;
  switch (plan.mode) {
    case ParamPlan::Mode::defaults: pairs = info.default_pairs; break;
    case ParamPlan::Mode::grid:
      for (std::int64_t a = -plan.bound; a <= plan.bound; ++a)
        for (std::int64_t b = -plan.bound; b <= plan.bound; ++b) pairs.emplace_back(a, b);
      break;
    case ParamPlan::Mode::random: pairs = random_pairs(plan.seed, plan.count, plan.bound); break;
  }

  std::vector<Params> out;
  switch (info.shape) {
    case ParamShape::none: out.push_back({}); break;
    case ParamShape::n:
      for (auto n : plan.n_list) out.push_back({std::nullopt, std::nullopt, n, std::nullopt});
      break;
    case ParamShape::pair:
      for (auto [a, b] : pairs) out.push_back({a, b, std::nullopt, plan.b});
      break;
    case ParamShape::pair_n:
      for (auto [a, b] : pairs)
        for (auto n : plan.n_list) out.push_back({a, b, n, std::nullopt});
      break;
    case ParamShape::even_a: {
      std::vector<std::int64_t> as;
      for (auto [a, b] : pairs) as.push_back(a - a % 2);
      std::sort(as.begin(), as.end());
      as.erase(std::unique(as.begin(), as.end()), as.end());
      for (auto a : as) out.push_back({a, std::nullopt, std::nullopt, std::nullopt});
      break;
    }
  }
  return out;
}

/// --threads beats HLV_THREADS beats the hardware concurrency.
inline unsigned resolve_threads(std::optional<long> flag) {
  long n = 0;
  if (flag) {
    n = *flag;
  } else if (const char* env = std::getenv("HLV_THREADS"); env && *env) {
    char* end = nullptr;
    n = std::strtol(env, &end, 10);
    if (*end != '\0') throw UsageError("HLV_THREADS must be a positive integer");
  } else {
    n = static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));
  }
  if (n < 1) throw UsageError("thread count must be >= 1");
  return static_cast<unsigned>(n);
}

struct ScanConfig {
  std::string selection = "all";  // suite name or check id / id prefix
  std::vector<const CheckInfo*> checks;
  std::uint64_t lo = 5;
  std::uint64_t hi = 1000;
  ParamPlan plan{};
  unsigned threads = 1;
  bool timings = false;

  void validate() const {
    if (lo < 5) throw UsageError("prime range must start at 5 or above");
    if (hi >= Modulus::prime_limit) throw UsageError("prime range must end below 2^21");
    if (lo > hi) throw UsageError("empty prime range");
    if (threads < 1) throw UsageError("thread count must be >= 1");
    if (checks.empty()) throw UsageError("no checks selected");
  }
};

struct CheckSummary {
  const CheckInfo* info;
  std::size_t pass = 0, fail = 0, skip = 0, flagged = 0;
};

struct ScanReport {
  ScanConfig config;
  std::vector<std::uint64_t> primes;
  std::vector<CheckResult> records;

  std::vector<CheckSummary> summary() const {
    std::vector<CheckSummary> out;
    std::map<std::string_view, std::size_t> index;
    for (const CheckInfo* c : config.checks) {
      index[c->id] = out.size();
      out.push_back({c});
    }
    for (const auto& r : records) {
      auto& s = out[index.at(r.id)];
      if (r.status == Status::pass) ++s.pass;
      if (r.status == Status::fail) ++s.fail;
      if (r.status == Status::skip) ++s.skip;
      if (r.flagged) ++s.flagged;
    }
    return out;
  }

  std::vector<const CheckResult*> findings() const {
    std::vector<const CheckResult*> out;
    for (const auto& r : records)
      if (r.status == Status::fail) out.push_back(&r);
    return out;
  }
};

/// 0: no failures;  1: a theorem/corollary/lemma/identity failed;  3: only conjectures failed.
inline int exit_code_for(const std::vector<CheckResult>& records) {
  bool bug = false, finding = false;
  for (const auto& r : records) {
    if (r.status != Status::fail) continue;
    const CheckInfo* info = find_check(r.id);
    if (info && !is_bug_level(info->kind))
      finding = true;
    else
      bug = true;
  }
  return bug ? 1 : (finding ? 3 : 0);
}

namespace detail {

inline bool params_less(const CheckResult& a, const CheckResult& b) {
  if (a.id != b.id) return a.id < b.id;
  return a.params < b.params;
}

/// All results at one prime, pair-parameterized checks grouped by (A, B) so
/// Lucas tables can be dropped between groups.
inline std::vector<CheckResult> scan_prime(std::uint64_t p, const ScanConfig& cfg,
                                           const std::vector<std::vector<Params>>& sets) {
  Workspace ws(p);
  std::vector<CheckResult> out;
  auto run = [&](const CheckInfo& info, const Params& q) {
    auto rs = evaluate(info, ws, q);
    for (auto& r : rs) {
      if (!cfg.timings) r.elapsed_us = 0;
      out.push_back(std::move(r));
    }
  };

  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::pair<std::size_t, Params>>> by_pair;
  for (std::size_t i = 0; i < cfg.checks.size(); ++i) {
    const CheckInfo& info = *cfg.checks[i];
    const bool paired = info.shape == ParamShape::pair || info.shape == ParamShape::pair_n;
    for (const Params& q : sets[i]) {
      if (paired)
        by_pair[{q.A.value_or(0), q.B.value_or(0)}].emplace_back(i, q);
      else
        run(info, q);
    }
  }
  for (const auto& [pair, jobs] : by_pair) {
    ws.drop_lucas();
    for (const auto& [i, q] : jobs) run(*cfg.checks[i], q);
  }
  std::stable_sort(out.begin(), out.end(), params_less);
  return out;
}

}  // namespace detail

inline ScanReport run_scan(const ScanConfig& cfg) {
  cfg.validate();
  ScanReport report{cfg, sieve(cfg.lo, cfg.hi).primes, {}};

  std::vector<std::vector<Params>> sets;
  for (const CheckInfo* c : cfg.checks) sets.push_back(param_sets(*c, cfg.plan));

  std::vector<std::vector<CheckResult>> per_prime(report.primes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= report.primes.size()) return;
      try {
        per_prime[i] = detail::scan_prime(report.primes[i], cfg, sets);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = report.primes.size();
        return;
      }
    }
  };

  const unsigned n = std::min<std::size_t>(cfg.threads, std::max<std::size_t>(1, report.primes.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);

  for (auto& chunk : per_prime)
    report.records.insert(report.records.end(), std::make_move_iterator(chunk.begin()),
                          std::make_move_iterator(chunk.end()));
  return report;
}

}  // namespace hlv
