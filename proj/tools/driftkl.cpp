// driftkl: per-pair computation, worked examples, and the exhaustive scan.
//
// Exit status: 0 on success, 1 when a scan finds violations or an example
// does not reproduce, 2 on bad input, 3 on any other library error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "driftkl/cli.hpp"
#include "driftkl/error.hpp"
#include "driftkl/scan.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("DRIFTKL_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring DRIFTKL_JOBS='" << env << "'\n";
  }
  return 1;
}

int exit_code_for(const driftkl::Error& e) {
  switch (e.kind()) {
    case driftkl::ErrorKind::ParseError:
    case driftkl::ErrorKind::NotComparable:
    case driftkl::ErrorKind::NotCovexillary:
    case driftkl::ErrorKind::RankMismatch:
    case driftkl::ErrorKind::RankTooLarge:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig and h-polynomials of covexillary Schubert varieties"};
  app.set_config("--config", "", "key=value file supplying option defaults");
  app.require_subcommand(1);

  std::string v_text;
  std::string w_text;
  std::string quantities = "P";
  std::string format = "json";
  auto* compute = app.add_subcommand("compute", "Polynomials and statistics for one pair v <= w");
  compute->add_option("--v", v_text, "Lower permutation, e.g. 1,2,3,4,5")->required();
  compute->add_option("--w", w_text, "Upper permutation, e.g. 5,2,3,4,1")->required();
  compute->add_option("--quantities", quantities, "Comma list from P,Q,H,Horacle,Htilde,mult,complex,tree")
      ->capture_default_str();
  compute->add_option("--format", format, "json, csv or latex")->capture_default_str();

  int n = 4;
  std::string checks = "all";
  int jobs = default_jobs();
  std::string out_path;
  int complex_limit = 12;
  auto* scan = app.add_subcommand("scan", "Run the verification checks over all covexillary pairs of S_n");
  scan->add_option("--n", n, "Rank, 2..7")->required();
  scan->add_option("--checks", checks, "Comma list of checks, or all")->capture_default_str();
  scan->add_option("--jobs", jobs, "Worker threads (default from DRIFTKL_JOBS)")->capture_default_str();
  scan->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  scan->add_option("--complex-box-limit", complex_limit, "Skip complex checks for larger shapes")
      ->capture_default_str();

  auto* examples = app.add_subcommand("examples", "Reproduce the worked examples and diff them");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      driftkl::ComputeRequest request;
      request.v = driftkl::parse_permutation(v_text);
      request.w = driftkl::parse_permutation(w_text);
      request.quantities = driftkl::parse_quantities(quantities);
      const auto fmt = driftkl::parse_format(format);
      std::cout << driftkl::render(driftkl::cmd_compute(request), fmt) << '\n';
      return 0;
    }
    if (*scan) {
      driftkl::ScanOptions options;
      options.n = n;
      options.checks = driftkl::parse_checks(checks);
      options.jobs = jobs;
      options.complex_box_limit = complex_limit;
      const driftkl::ScanReport report = driftkl::run_scan(options);
      const std::string text = driftkl::to_json(report).dump(2);
      if (out_path.empty()) {
        std::cout << text << '\n';
      } else {
        std::ofstream file(out_path);
        if (!file) {
          std::cerr << "cannot write " << out_path << '\n';
          return 3;
        }
        file << text << '\n';
        std::cerr << report.violations.size() << " violations over " << report.pairs << " pairs\n";
      }
      return report.clean() ? 0 : 1;
    }
    if (*examples) {
      bool all_ok = true;
      for (const auto& check : driftkl::reproduce_examples()) {
        std::cout << (check.ok ? "OK       " : "MISMATCH ") << check.name << ": " << check.actual;
        if (!check.ok) std::cout << " (expected " << check.expected << ")";
        std::cout << '\n';
        all_ok = all_ok && check.ok;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const driftkl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 0;
}
