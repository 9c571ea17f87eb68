#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "driftkl/hecke.hpp"
#include <json.hpp>

namespace driftkl {

enum class Check {
  PeqQ,
  PleqH,
  degEq,
  semicontinuity,
  HoracleEq,
  HtildeEq,
  multEq,
  specialBoxAgree,
  psiBijection,
  complexFacets,
  coeffBound,
  symmetry,
  unimodalityReport,
};

std::string to_string(Check c);
/// Throws Error{ParseError} for unknown names.
Check parse_check(const std::string& name);
/// Comma-separated; empty or "all" selects every check.
std::vector<Check> parse_checks(const std::string& list);
std::vector<Check> all_checks();

struct Violation {
  std::string check;
  std::string v;
  std::string w;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct CheckTally {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t skipped = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct ScanReport {
  int n = 0;
  std::vector<std::string> checks;
  std::int64_t covexillary = 0;  // covexillary w in S_n
  std::int64_t pairs = 0;        // (v, w) with v <= w
  std::map<std::string, CheckTally> tallies;
  /// Report-only counters, e.g. unimodal H or sphere complexes.
  std::map<std::string, std::int64_t> observations;
  std::vector<Violation> violations;
  // Timing is excluded from equality.
  double seconds = 0.0;
  int jobs = 1;

  bool clean() const noexcept { return violations.empty(); }
  bool same_content(const ScanReport& other) const;
};

struct ScanOptions {
  int n = 4;
  std::vector<Check> checks = all_checks();
  /// 1 runs the serial reference loop; larger values use OpenMP with that
  /// many threads.
  int jobs = 1;
  /// Complex checks are skipped above this many boxes.
  int complex_box_limit = 12;
};

/// Every covexillary w in S_n and every v <= w. Throws Error{RankTooLarge}
/// outside 2 <= n <= 7.
ScanReport run_scan(const ScanOptions& options);

nlohmann::ordered_json to_json(const ScanReport& report);
ScanReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace driftkl
