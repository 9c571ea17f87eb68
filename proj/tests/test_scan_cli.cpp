#include <doctest.h>

#include <json.hpp>

#include "driftkl/cli.hpp"
#include "driftkl/scan.hpp"
#include "test_util.hpp"

using namespace driftkl;

namespace {

ComputeRequest request(const char* v, const char* w, const char* quantities) {
  return ComputeRequest{parse_permutation(v), parse_permutation(w), parse_quantities(quantities)};
}

}  // namespace

TEST_CASE("check names") {
  CHECK(parse_checks("all").size() == all_checks().size());
  CHECK(parse_checks("").size() == all_checks().size());
  CHECK(parse_checks("PeqQ,PleqH") == std::vector<Check>{Check::PeqQ, Check::PleqH});
  for (Check c : all_checks()) CHECK(parse_check(to_string(c)) == c);
  CHECK(kind_of([] { parse_check("nope"); }) == ErrorKind::ParseError);
}

TEST_CASE("scan is independent of the job count") {
  ScanOptions options;
  options.n = 4;
  const ScanReport serial = run_scan(options);
  options.jobs = 2;
  const ScanReport parallel = run_scan(options);
  CHECK(serial.clean());
  CHECK(serial.same_content(parallel));
  CHECK(serial.covexillary == 23);
  CHECK(serial.tallies.at("PeqQ").failed == 0);
  CHECK(serial.tallies.at("PeqQ").passed > 0);
  CHECK(kind_of([] { run_scan(ScanOptions{8}); }) == ErrorKind::RankTooLarge);
  CHECK(kind_of([] { run_scan(ScanOptions{1}); }) == ErrorKind::RankTooLarge);
}

TEST_CASE("scan reports round-trip through JSON") {
  ScanOptions options;
  options.n = 4;
  options.checks = parse_checks("PeqQ,semicontinuity,unimodalityReport");
  ScanReport report = run_scan(options);
  report.violations.push_back({"PeqQ", "1,2,3,4", "4,3,2,1", "synthetic"});
  const auto text = to_json(report).dump();
  const ScanReport back = report_from_json(nlohmann::ordered_json::parse(text));
  CHECK(back.same_content(report));
  CHECK(back.seconds == doctest::Approx(report.seconds));
  CHECK(to_json(back).dump() == text);
}

TEST_CASE("compute") {
  CHECK(cmd_compute(request("1,2,3,4,5", "5,2,3,4,1", "P,H")).dump() == R"({"P":[1,2,1],"H":[1,3,1]})");
  CHECK(cmd_compute(request("1,3,4,2,5", "3,4,5,1,2", "P")).dump() == R"({"P":[1,2]})");
  const auto smooth = cmd_compute(request("5,2,3,4,1", "5,2,3,4,1", "P,Q,H,Horacle,Htilde"));
  for (const auto& [key, value] : smooth.items()) CHECK(value == nlohmann::ordered_json::array({1}));
  const auto all = cmd_compute(request("1,2,3,4,5", "5,2,3,4,1", "Q,Htilde,mult,complex,tree"));
  CHECK(all["Q"] == nlohmann::ordered_json::array({1, 2, 1}));
  CHECK(all["Htilde"] == nlohmann::ordered_json::array({1, 2, 1, 1}));
  CHECK(all.contains("mult"));
  CHECK(all.contains("complex"));
  CHECK(all.contains("tree"));

  CHECK(kind_of([] { cmd_compute(request("5,2,3,4,1", "1,2,3,4,5", "P")); }) == ErrorKind::NotComparable);
  CHECK(kind_of([] { cmd_compute(request("1,2,3,4", "3,4,1,2", "H")); }) == ErrorKind::NotCovexillary);
  CHECK(cmd_compute(request("1,2,3,4", "3,4,1,2", "P")).dump() == R"({"P":[1,1]})");
  CHECK(kind_of([] { parse_quantities("P,X"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_format("yaml"); }) == ErrorKind::ParseError);
}

TEST_CASE("render") {
  const auto result = cmd_compute(request("1,2,3,4,5", "5,2,3,4,1", "P,H"));
  CHECK(render(result, OutputFormat::Json) == R"({"P":[1,2,1],"H":[1,3,1]})");
  CHECK(render(result, OutputFormat::Csv) == "quantity,value\nP,1;2;1\nH,1;3;1");
  const std::string latex = render(result, OutputFormat::Latex);
  CHECK(latex.find("1+2q+q^{2}") != std::string::npos);
  CHECK(latex.find("align*") != std::string::npos);
}

TEST_CASE("worked examples reproduce") {
  const auto checks = reproduce_examples();
  CHECK(checks.size() >= 10);
  for (const auto& c : checks) {
    INFO(c.name << ": expected " << c.expected << ", got " << c.actual);
    CHECK(c.ok);
  }
}
