#include "driftkl/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "driftkl/complex.hpp"
#include "driftkl/drift.hpp"
#include "driftkl/error.hpp"
#include "driftkl/qseries.hpp"
#include "driftkl/tableaux.hpp"

namespace driftkl {
namespace {

constexpr std::pair<Check, const char*> kCheckNames[] = {
    {Check::PeqQ, "PeqQ"},
    {Check::PleqH, "PleqH"},
    {Check::degEq, "degEq"},
    {Check::semicontinuity, "semicontinuity"},
    {Check::HoracleEq, "HoracleEq"},
    {Check::HtildeEq, "HtildeEq"},
    {Check::multEq, "multEq"},
    {Check::specialBoxAgree, "specialBoxAgree"},
    {Check::psiBijection, "psiBijection"},
    {Check::complexFacets, "complexFacets"},
    {Check::coeffBound, "coeffBound"},
    {Check::symmetry, "symmetry"},
    {Check::unimodalityReport, "unimodalityReport"},
};

bool needs_hecke(const std::vector<Check>& checks) {
  for (Check c : checks) {
    if (c == Check::PeqQ || c == Check::PleqH || c == Check::degEq || c == Check::coeffBound ||
        c == Check::symmetry || c == Check::complexFacets) {
      return true;
    }
  }
  return false;
}

/// Results for one covexillary w; merged in w order afterwards.
struct Partial {
  std::int64_t pairs = 0;
  std::map<std::string, CheckTally> tallies;
  std::map<std::string, std::int64_t> observations;
  std::vector<Violation> violations;
};

class PairRunner {
 public:
  PairRunner(const ScanOptions& options, KLTable* table, Partial& out)
      : options_(options), table_(table), out_(out) {}

  bool wants(Check c) const {
    return std::find(options_.checks.begin(), options_.checks.end(), c) != options_.checks.end();
  }

  /// Runs `body` as check c; `body` returns an empty string on success or a
  /// description of the failure.
  template <typename Body>
  void run(Check c, const Permutation& v, const Permutation& w, Body&& body) {
    if (!wants(c)) return;
    const std::string name = to_string(c);
    std::string failure;
    try {
      failure = body();
    } catch (const Error& e) {
      failure = e.what();
    }
    auto& tally = out_.tallies[name];
    if (failure == kSkipped) {
      ++tally.skipped;
    } else if (failure.empty()) {
      ++tally.passed;
    } else {
      ++tally.failed;
      out_.violations.push_back({name, v.to_string(), w.to_string(), failure});
    }
  }

  void observe(const std::string& key) { ++out_.observations[key]; }

  IntPolynomial kl(const Permutation& v, const Permutation& w) { return table_->polynomial(v, w); }

  static inline const std::string kSkipped = "\x01skip";

 private:
  const ScanOptions& options_;
  KLTable* table_;
  Partial& out_;
};

std::string mismatch(const std::string& what, const IntPolynomial& a, const IntPolynomial& b) {
  return what + ": " + a.to_string() + " vs " + b.to_string();
}

std::string check_psi(const PairGeometry& g) {
  if (g.shape.empty()) return {};
  const auto configs = enumerate_drift(g);
  std::set<FlaggedTableau> images;
  for (const auto& d : configs) {
    const FlaggedTableau t = psi(d, g);
    if (depth(t) != d.weight()) return "depth " + std::to_string(depth(t)) + " != wt for " + t.to_string();
    if (!images.insert(t).second) return "psi not injective at " + t.to_string();
  }
  for (const auto& t : enumerate_flagged_ssyt(g.shape, g.flags)) {
    if (is_in_psi_image(t, g) != (images.count(t) > 0)) return "image predicate wrong at " + t.to_string();
    const auto path = augmentation_path(t, g);
    for (std::size_t k = 1; k < path.size(); ++k) {
      if (!path[k].is_flagged(g.flags)) return "augmentation left SSYT at " + path[k].to_string();
      if (depth(path[k]) < depth(path[k - 1])) return "augmentation lowered depth at " + path[k].to_string();
    }
    if (!images.count(path.back())) return "augmentation of " + t.to_string() + " missed the image";
  }
  // Lascoux tree labelings carry the same weights as the configurations.
  std::multiset<int> drift_weights;
  std::multiset<int> label_weights;
  for (const auto& d : configs) drift_weights.insert(d.weight());
  for (const auto& l : enumerate_labelings(lascoux_tree(g))) label_weights.insert(labeling_weight(l));
  if (drift_weights != label_weights) return "labeling weights differ from drift weights";
  return {};
}

void run_pair_checks(PairRunner& r, const ScanOptions& options, const Permutation& v, const Permutation& w,
                     const PairGeometry& g, const IntPolynomial& h) {
  const int n = w.size();
  const IntPolynomial q = q_polynomial(g);
  std::optional<IntPolynomial> p;
  auto kl = [&]() -> const IntPolynomial& {
    if (!p) p = r.kl(v, w);
    return *p;
  };

  r.run(Check::PeqQ, v, w, [&]() { return q == kl() ? std::string{} : mismatch("P vs Q", kl(), q); });
  r.run(Check::PleqH, v, w, [&]() {
    return coefficientwise_leq(kl(), h) ? std::string{} : mismatch("P not below H", kl(), h);
  });
  r.run(Check::degEq, v, w, [&]() {
    return kl().degree() == h.degree() ? std::string{} : mismatch("deg P vs deg H", kl(), h);
  });
  r.run(Check::HoracleEq, v, w, [&]() {
    const IntPolynomial oracle = h_polynomial_setvalued_oracle(g);
    return oracle == h ? std::string{} : mismatch("H vs set-valued", h, oracle);
  });
  r.run(Check::HtildeEq, v, w, [&]() {
    const IntPolynomial det = htilde_determinant(v, w);
    const IntPolynomial country = country_drift_series(g);
    r.observe(det == h ? "Htilde equals H" : "Htilde differs from H");
    return det == country ? std::string{} : mismatch("determinant vs countries", det, country);
  });
  r.run(Check::multEq, v, w, [&]() {
    const std::int64_t ssyt = g.shape.empty() ? 1 : static_cast<std::int64_t>(count_flagged_ssyt(g.shape, g.flags));
    const std::int64_t h1 = h.evaluate(1);
    const std::int64_t ht1 = htilde_determinant(v, w).evaluate(1);
    const std::int64_t c1 = country_drift_series(g).evaluate(1);
    if (h1 == ht1 && ht1 == ssyt && ssyt == c1) return std::string{};
    std::ostringstream s;
    s << "H(1)=" << h1 << " Htilde(1)=" << ht1 << " #SSYT=" << ssyt << " countries=" << c1;
    return s.str();
  });
  r.run(Check::psiBijection, v, w, [&]() { return check_psi(g); });
  r.run(Check::complexFacets, v, w, [&]() -> std::string {
    if (g.shape.empty() || g.shape.size() > options.complex_box_limit) return PairRunner::kSkipped;
    const TableauComplex c = build_drift_complex(g);
    if (c.facet_count() != c.configurations.size()) return "facet count differs from drift count";
    const EulerData e = euler_characteristic(c);
    r.observe(e.sphere ? "sphere" : "ball");
    if (hybrid_q_series(c) != kl()) return mismatch("hybrid q-series vs P", hybrid_q_series(c), kl());
    if (hybrid_at_beta(c, -1) != k_polynomial(c)) return "beta = -1 specialization differs from K";
    for (int u : c.vertices) {
      if (!vertex_decomposition_identity(c, u)) return "vertex decomposition fails at ground " + std::to_string(u);
    }
    return {};
  });
  r.run(Check::coeffBound, v, w, [&]() {
    const int k = g.shape.empty() ? 0 : g.pangaea.size();
    const int m = (n - k + 1) / 2;
    IntPolynomial bound = IntPolynomial::constant(1);
    for (int i = 0; i < k; ++i) bound *= q_integer(m);
    return coefficientwise_leq(kl(), bound) ? std::string{} : mismatch("P vs [m]^k", kl(), bound);
  });
  r.run(Check::symmetry, v, w, [&]() {
    const Permutation w0 = longest_element(n);
    const Permutation vi = inverse(v);
    const Permutation wi = inverse(w);
    const Permutation vc = compose(compose(w0, v), w0);
    const Permutation wc = compose(compose(w0, w), w0);
    if (r.kl(vi, wi) != kl()) return mismatch("P under inverse", kl(), r.kl(vi, wi));
    if (r.kl(vc, wc) != kl()) return mismatch("P under w0-conjugation", kl(), r.kl(vc, wc));
    if (q_polynomial(vi, wi) != q) return mismatch("Q under inverse", q, q_polynomial(vi, wi));
    if (q_polynomial(vc, wc) != q) return mismatch("Q under transpose", q, q_polynomial(vc, wc));
    return std::string{};
  });
  r.run(Check::unimodalityReport, v, w, [&]() {
    r.observe(h.is_unimodal() ? "H unimodal" : "H not unimodal");
    return std::string{};
  });
}

Partial scan_one(const ScanOptions& options, KLTable* table, const Permutation& w,
                 const std::vector<Permutation>& perms) {
  Partial out;
  PairRunner r(options, table, out);
  std::vector<Permutation> lower;
  for (const Permutation& v : perms) {
    if (bruhat_leq(v, w)) lower.push_back(v);
  }
  out.pairs = static_cast<std::int64_t>(lower.size());

  const Partition lambda = shape(w);
  r.run(Check::specialBoxAgree, w, w, [&]() -> std::string {
    if (lambda.empty()) return {};
    if (special_boxes_greedy(lambda) != special_boxes_parens(lambda)) return "greedy and parenthesis special boxes differ";
    if (!same_shape(lascoux_tree(w, w), parenthesis_tree(lambda))) return "Lascoux tree differs from nesting tree";
    return {};
  });

  std::vector<IntPolynomial> h(lower.size());
  for (std::size_t k = 0; k < lower.size(); ++k) {
    const Permutation& v = lower[k];
    try {
      const PairGeometry g = make_pair_geometry(v, w);
      h[k] = h_polynomial(g);
      run_pair_checks(r, options, v, w, g, h[k]);
    } catch (const Error& e) {
      out.violations.push_back({"geometry", v.to_string(), w.to_string(), e.what()});
    }
  }

  if (r.wants(Check::semicontinuity)) {
    for (std::size_t a = 0; a < lower.size(); ++a) {
      for (std::size_t b = 0; b < lower.size(); ++b) {
        if (a == b || !bruhat_leq(lower[b], lower[a])) continue;
        // lower[b] <= lower[a] <= w.
        r.run(Check::semicontinuity, lower[a], w, [&]() {
          return coefficientwise_leq(h[a], h[b]) ? std::string{}
                                                  : "below " + lower[b].to_string() + ": " + mismatch("H", h[a], h[b]);
        });
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(Check c) {
  for (const auto& [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "unknown";
}

Check parse_check(const std::string& name) {
  for (const auto& [check, label] : kCheckNames) {
    if (name == label) return check;
  }
  throw Error(ErrorKind::ParseError, "unknown check '" + name + "'");
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& entry : kCheckNames) out.push_back(entry.first);
  return out;
}

std::vector<Check> parse_checks(const std::string& list) {
  if (list.empty() || list == "all") return all_checks();
  std::vector<Check> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_check(item));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ScanReport::same_content(const ScanReport& o) const {
  return n == o.n && checks == o.checks && covexillary == o.covexillary && pairs == o.pairs &&
         tallies == o.tallies && observations == o.observations && violations == o.violations;
}

ScanReport run_scan(const ScanOptions& options) {
  if (options.n < 2 || options.n > 7) {
    throw Error(ErrorKind::RankTooLarge, "scan supports 2 <= n <= 7, got " + std::to_string(options.n));
  }
  const auto start = std::chrono::steady_clock::now();
  const int jobs = std::max(1, options.jobs);
  const Execution mode = jobs > 1 ? Execution::Parallel : Execution::Serial;

  ScanReport report;
  report.n = options.n;
  report.jobs = jobs;
  for (Check c : options.checks) report.checks.push_back(to_string(c));

  KLTable* table = nullptr;
  if (needs_hecke(options.checks)) {
    table = &shared_kl_table(options.n);
    if (mode == Execution::Parallel) omp_set_num_threads(jobs);
    table->precompute(mode);
  }

  const std::vector<Permutation> perms = all_permutations(options.n);
  std::vector<Permutation> targets;
  for (const Permutation& w : perms) {
    if (is_covexillary(w)) targets.push_back(w);
  }
  std::vector<Partial> partials(targets.size());
  const std::int64_t count = static_cast<std::int64_t>(targets.size());
  if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::int64_t k = 0; k < count; ++k) {
      partials[static_cast<std::size_t>(k)] = scan_one(options, table, targets[static_cast<std::size_t>(k)], perms);
    }
  } else {
    for (std::int64_t k = 0; k < count; ++k) {
      partials[static_cast<std::size_t>(k)] = scan_one(options, table, targets[static_cast<std::size_t>(k)], perms);
    }
  }

  report.covexillary = count;
  for (Check c : options.checks) report.tallies[to_string(c)];
  for (const Partial& part : partials) {
    report.pairs += part.pairs;
    for (const auto& [name, t] : part.tallies) {
      auto& dst = report.tallies[name];
      dst.passed += t.passed;
      dst.failed += t.failed;
      dst.skipped += t.skipped;
    }
    for (const auto& [key, value] : part.observations) report.observations[key] += value;
    report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json to_json(const ScanReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["checks"] = report.checks;
  j["covexillary"] = report.covexillary;
  j["pairs"] = report.pairs;
  auto& tallies = j["tallies"] = nlohmann::ordered_json::object();
  for (const auto& [name, t] : report.tallies) {
    tallies[name] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
  }
  j["observations"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.observations) j["observations"][key] = value;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back({{"check", v.check}, {"v", v.v}, {"w", v.w}, {"detail", v.detail}});
  }
  j["timing"] = {{"seconds", report.seconds}, {"jobs", report.jobs}};
  return j;
}

ScanReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    ScanReport r;
    r.n = j.at("n").get<int>();
    r.checks = j.at("checks").get<std::vector<std::string>>();
    r.covexillary = j.at("covexillary").get<std::int64_t>();
    r.pairs = j.at("pairs").get<std::int64_t>();
    for (const auto& [name, t] : j.at("tallies").items()) {
      r.tallies[name] = {t.at("passed").get<std::int64_t>(), t.at("failed").get<std::int64_t>(),
                         t.at("skipped").get<std::int64_t>()};
    }
    for (const auto& [key, value] : j.at("observations").items()) r.observations[key] = value.get<std::int64_t>();
    for (const auto& v : j.at("violations")) {
      r.violations.push_back({v.at("check").get<std::string>(), v.at("v").get<std::string>(),
                              v.at("w").get<std::string>(), v.at("detail").get<std::string>()});
    }
    r.seconds = j.at("timing").at("seconds").get<double>();
    r.jobs = j.at("timing").at("jobs").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("scan report: ") + e.what());
  }
}

}  // namespace driftkl
