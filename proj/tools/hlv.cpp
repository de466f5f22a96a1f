// hlv: verify, scan and cross-check harmonic/Lucas congruences.
//
//   hlv verify --check thm1.3 --primes 5..1000
//   hlv scan --suite theorems --max-prime 10000 --params random --seed 7
//   hlv oracle --check thm1.1.v --prime 5 --A 1 --B -1
//
// Exit codes: 0 all pass or skip, 1 a theorem-level check failed,
// 2 usage error, 3 only conjecture checks failed.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlv/oracle.hpp"
#include "hlv/report.hpp"
#include "hlv/scan.hpp"

namespace {

constexpr int exit_usage = 2;

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw hlv::UsageError("malformed number: " + std::string(s));
  return v;
}

/// "lo..hi" or a single prime.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto p = parse_u64(s);
    return {p, p};
  }
  return {parse_u64(std::string_view(s).substr(0, dots)), parse_u64(std::string_view(s).substr(dots + 2))};
}

struct CommonOpts {
  std::optional<std::int64_t> A, B, n, b;
  std::string params = "defaults";
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::int64_t bound = 50;
  std::vector<std::int64_t> n_list;
  std::optional<long> threads;
  std::string format = "text";
  bool timings = false;
};

void add_param_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--A", o.A, "Lucas parameter A");
  cmd->add_option("--B", o.B, "Lucas parameter B");
  cmd->add_option("--n", o.n, "exponent n for checks that take one");
  cmd->add_option("--b", o.b, "square root of B mod p (lemma3.1)");
  cmd->add_option("--params", o.params, "parameter mode")->check(CLI::IsMember({"defaults", "grid", "random"}));
  cmd->add_option("--seed", o.seed, "seed for --params random");
  cmd->add_option("--count", o.count, "number of random (A,B) pairs");
  cmd->add_option("--bound", o.bound, "bound on |A|, |B| for grid and random modes");
  cmd->add_option("--n-list", o.n_list, "exponents used when --n is not given")->delimiter(',');
  cmd->add_option("--threads", o.threads, "worker threads (default: HLV_THREADS or all cores)");
  cmd->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--timings", o.timings, "keep per-record elapsed_us (output is no longer reproducible)");
}

hlv::ParamPlan make_plan(const CommonOpts& o) {
  hlv::ParamPlan plan;
  if (o.params == "grid") plan.mode = hlv::ParamPlan::Mode::grid;
  if (o.params == "random") plan.mode = hlv::ParamPlan::Mode::random;
  plan.seed = o.seed;
  plan.count = o.count;
  if (o.bound < 0 || o.bound >= (std::int64_t{1} << 30)) throw hlv::UsageError("--bound out of range");
  plan.bound = o.bound;
  if (!o.n_list.empty()) plan.n_list = o.n_list;
  if (o.n) plan.n_list = {*o.n};
  for (auto n : plan.n_list)
    if (n < 0) throw hlv::UsageError("n must be non-negative");
  plan.A = o.A;
  plan.B = o.B;
  plan.b = o.b;
  return plan;
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw hlv::UsageError("cannot write " + path);
  return file;
}

int cmd_verify(const std::string& check, const std::string& primes, const CommonOpts& o) {
  hlv::ScanConfig cfg;
  cfg.selection = check;
  cfg.checks = hlv::select_checks(check);
  std::tie(cfg.lo, cfg.hi) = parse_range(primes);
  cfg.plan = make_plan(o);
  cfg.threads = hlv::resolve_threads(o.threads);
  cfg.timings = true;
  const auto report = hlv::run_scan(cfg);
  hlv::write_records(std::cout, hlv::parse_format(o.format), report.records);
  return hlv::exit_code_for(report.records);
}

struct ScanOpts {
  std::string suite, check, primes, output, findings, records;
  std::optional<std::uint64_t> max_prime;
};

int cmd_scan(const ScanOpts& s, const CommonOpts& o) {
  hlv::ScanConfig cfg;
  if (!s.check.empty()) {
    cfg.selection = s.check;
    cfg.checks = hlv::select_checks(s.check);
  } else {
    cfg.selection = s.suite.empty() ? "all" : s.suite;
    cfg.checks = hlv::suite_checks(hlv::parse_suite(cfg.selection));
  }
  if (!s.primes.empty()) std::tie(cfg.lo, cfg.hi) = parse_range(s.primes);
  if (s.max_prime) cfg.hi = *s.max_prime;
  cfg.plan = make_plan(o);
  cfg.threads = hlv::resolve_threads(o.threads);
  cfg.timings = o.timings;
  const auto report = hlv::run_scan(cfg);
  const auto fmt = hlv::parse_format(o.format);

  std::ofstream out_file;
  hlv::write_scan_report(open_or_stdout(s.output, out_file), fmt, report);
  if (!s.findings.empty()) {
    std::ofstream f;
    hlv::write_records(open_or_stdout(s.findings, f), fmt, report.findings());
  }
  if (!s.records.empty()) {
    std::ofstream f;
    hlv::write_records(open_or_stdout(s.records, f), fmt, report.records);
  }
  return hlv::exit_code_for(report.records);
}

int cmd_oracle(const std::string& check, std::uint64_t p, const CommonOpts& o) {
  const hlv::oracle::ExactEvaluator exact(p);
  const auto plan = make_plan(o);
  hlv::Workspace ws(p);
  bool agree = true;
  for (const hlv::CheckInfo* info : hlv::select_checks(check)) {
    for (const hlv::Params& q : hlv::param_sets(*info, plan)) {
      for (const auto& r : hlv::evaluate(*info, ws, q)) {
        std::cout << hlv::to_text(r) << '\n';
        if (r.status == hlv::Status::skip) continue;
        try {
          const auto e = exact.evaluate(r.id, r.params);
          const auto c = hlv::oracle::cross_check(r, exact);
          std::cout << "  exact lhs=" << e.lhs.get_str() << " rhs=" << e.rhs.get_str() << '\n'
                    << "  fast   (lhs, rhs) = (" << r.lhs.value() << ", " << r.rhs.value() << ")\n"
                    << "  oracle (lhs, rhs) = (" << c.oracle_lhs.value() << ", " << c.oracle_rhs.value() << ")  "
                    << (c.agree ? "agree" : "DISAGREE") << '\n';
          agree = agree && c.agree;
        } catch (const hlv::oracle::NotReducible& e) {
          std::cout << "  oracle: " << e.what() << '\n';
          agree = false;
        }
      }
    }
  }
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic-number and Lucas-sequence congruence checker"};
  app.require_subcommand(1);

  CommonOpts verify_opts, scan_opts, oracle_opts;

  std::string verify_check, verify_primes = "5..1000";
  auto* verify = app.add_subcommand("verify", "run one check (or id prefix) over a prime range");
  verify->add_option("--check", verify_check, "check id or id prefix")->required();
  verify->add_option("--primes", verify_primes, "prime range lo..hi or a single prime");
  add_param_options(verify, verify_opts);

  ScanOpts so;
  auto* scan = app.add_subcommand("scan", "run a suite over a prime range and summarise");
  scan->add_option("--suite", so.suite, "theorems, lemmas, identities, conjectures or all");
  scan->add_option("--check", so.check, "check id or id prefix instead of a suite");
  scan->add_option("--primes", so.primes, "prime range lo..hi");
  scan->add_option("--max-prime", so.max_prime, "upper end of the prime range");
  scan->add_option("--output", so.output, "summary file (default stdout)");
  scan->add_option("--findings", so.findings, "write failing records here");
  scan->add_option("--records", so.records, "write every record here");
  add_param_options(scan, scan_opts);

  std::string oracle_check;
  std::uint64_t oracle_prime = 0;
  auto* oracle = app.add_subcommand("oracle", "compare the fast pipeline with exact rational sums");
  oracle->add_option("--check", oracle_check, "check id or id prefix")->required();
  oracle->add_option("--prime", oracle_prime, "prime p <= 500")->required();
  add_param_options(oracle, oracle_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*verify) return cmd_verify(verify_check, verify_primes, verify_opts);
    if (*scan) return cmd_scan(so, scan_opts);
    if (*oracle) return cmd_oracle(oracle_check, oracle_prime, oracle_opts);
  } catch (const hlv::UsageError& e) {
    std::cerr << "hlv: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hlv: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "hlv: internal error: " << e.what() << '\n';
    return 1;
  }
  return exit_usage;
}
