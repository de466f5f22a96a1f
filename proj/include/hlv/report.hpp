#pragma once

// Text, JSON-lines and CSV rendering of check results and scan reports.
//
// JSON record schema (one object per line):
//   {"check": str, "prime": int, "params": {"A"?, "B"?, "n"?, "b"?: int},
//    "modulus": int, "lhs": int, "rhs": int, "residual": int,
//    "status": "pass"|"fail"|"skip", "elapsed_us": int}
// CSV columns: check,prime,A,B,n,b,modulus,lhs,rhs,residual,status,elapsed_us

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hlv/checks.hpp"
#include "hlv/scan.hpp"

namespace hlv {

enum class Format { text, json, csv };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("unknown output format: " + std::string(s));
}

inline nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (r.params.A) params["A"] = *r.params.A;
  if (r.params.B) params["B"] = *r.params.B;
  if (r.params.n) params["n"] = *r.params.n;
  if (r.params.b) params["b"] = *r.params.b;
  return {{"check", r.id},
          {"prime", r.prime},
          {"params", params},
          {"modulus", r.modulus()},
          {"lhs", r.lhs.value()},
          {"rhs", r.rhs.value()},
          {"residual", r.residual.value()},
          {"status", to_string(r.status)},
          {"elapsed_us", r.elapsed_us}};
}

inline constexpr std::string_view csv_header =
    "check,prime,A,B,n,b,modulus,lhs,rhs,residual,status,elapsed_us";

inline std::string to_csv(const CheckResult& r) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream os;
  os << r.id << ',' << r.prime << ',' << opt(r.params.A) << ',' << opt(r.params.B) << ','
     << opt(r.params.n) << ',' << opt(r.params.b) << ',' << r.modulus() << ',' << r.lhs.value() << ','
     << r.rhs.value() << ',' << r.residual.value() << ',' << to_string(r.status) << ',' << r.elapsed_us;
  return os.str();
}

inline std::string to_text(const CheckResult& r) {
  std::ostringstream os;
  os << r.id << " p=" << r.prime;
  if (r.params.A) os << " A=" << *r.params.A;
  if (r.params.B) os << " B=" << *r.params.B;
  if (r.params.n) os << " n=" << *r.params.n;
  if (r.params.b) os << " b=" << *r.params.b;
  os << " mod=" << r.modulus() << " lhs=" << r.lhs.value() << " rhs=" << r.rhs.value()
     << " residual=" << r.residual.value() << ' ' << to_string(r.status) << " (" << r.elapsed_us << "us)";
  if (!r.note.empty()) os << " [" << r.note << ']';
  return os.str();
}

/// One record per line in the chosen format; CSV gets a header line.
inline void write_records(std::ostream& os, Format f, const std::vector<const CheckResult*>& rs) {
  if (f == Format::csv) os << csv_header << '\n';
  for (const CheckResult* r : rs) {
    switch (f) {
      case Format::text: os << to_text(*r) << '\n'; break;
      case Format::json: os << to_json(*r).dump() << '\n'; break;
      case Format::csv: os << to_csv(*r) << '\n'; break;
    }
  }
}

inline void write_records(std::ostream& os, Format f, const std::vector<CheckResult>& rs) {
  std::vector<const CheckResult*> ptrs;
  for (const auto& r : rs) ptrs.push_back(&r);
  write_records(os, f, ptrs);
}

inline std::string describe_plan(const ParamPlan& plan) {
  std::ostringstream os;
  switch (plan.mode) {
    case ParamPlan::Mode::defaults: os << "defaults"; break;
    case ParamPlan::Mode::grid: os << "grid(bound=" << plan.bound << ")"; break;
    case ParamPlan::Mode::random:
      os << "random(seed=" << plan.seed << ",count=" << plan.count << ",bound=" << plan.bound << ")";
      break;
  }
  os << " n=";
  for (std::size_t i = 0; i < plan.n_list.size(); ++i) os << (i ? "," : "") << plan.n_list[i];
  return os.str();
}

/// Summary plus findings. Thread count and timings are left out so the
/// report does not depend on how the scan was executed.
inline void write_scan_report(std::ostream& os, Format f, const ScanReport& rep) {
  const auto summary = rep.summary();
  const auto findings = rep.findings();
  const int code = exit_code_for(rep.records);
  const ScanConfig& cfg = rep.config;

  if (f == Format::json) {
    nlohmann::ordered_json j;
    j["header"] = {{"selection", cfg.selection},
                   {"lo", cfg.lo},
                   {"hi", cfg.hi},
                   {"primes", rep.primes.size()},
                   {"params", describe_plan(cfg.plan)},
                   {"seed", cfg.plan.seed}};
    auto rows = nlohmann::ordered_json::array();
    for (const auto& s : summary)
      rows.push_back({{"check", s.info->id},
                      {"kind", to_string(s.info->kind)},
                      {"pass", s.pass},
                      {"fail", s.fail},
                      {"skip", s.skip},
                      {"flagged", s.flagged}});
    j["summary"] = rows;
    auto fs = nlohmann::ordered_json::array();
    for (const CheckResult* r : findings) fs.push_back(to_json(*r));
    j["findings"] = fs;
    j["exit_code"] = code;
    os << j.dump(2) << '\n';
    return;
  }
  if (f == Format::csv) {
    os << "check,kind,pass,fail,skip,flagged\n";
    for (const auto& s : summary)
      os << s.info->id << ',' << to_string(s.info->kind) << ',' << s.pass << ',' << s.fail << ',' << s.skip
         << ',' << s.flagged << '\n';
    return;
  }

  os << "# scan " << cfg.selection << " primes " << cfg.lo << ".." << cfg.hi << " (" << rep.primes.size()
     << " primes) params " << describe_plan(cfg.plan) << '\n';
  os << "check                 kind          pass     fail     skip  flagged\n";
  for (const auto& s : summary) {
    std::string id(s.info->id), kind(to_string(s.info->kind));
    id.resize(std::max<std::size_t>(id.size(), 21), ' ');
    kind.resize(std::max<std::size_t>(kind.size(), 11), ' ');
    char counts[64];
    std::snprintf(counts, sizeof counts, "%8zu %8zu %8zu %8zu", s.pass, s.fail, s.skip, s.flagged);
    os << id << ' ' << kind << ' ' << counts << '\n';
  }
  os << "findings: " << findings.size() << '\n';
  for (const CheckResult* r : findings) {
    const CheckInfo* info = find_check(r->id);
    os << (info && is_bug_level(info->kind) ? "BUG " : "FINDING ") << to_text(*r) << '\n';
  }
  os << "exit: " << code << '\n';
}

}  // namespace hlv
