#include "driftkl/cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "driftkl/complex.hpp"
#include "driftkl/drift.hpp"
#include "driftkl/error.hpp"
#include "driftkl/hecke.hpp"
#include "driftkl/qseries.hpp"
#include "driftkl/tableaux.hpp"

namespace driftkl {
namespace {

const std::vector<std::string> kQuantities = {"P", "Q", "H", "Horacle", "Htilde", "mult", "complex", "tree"};

nlohmann::ordered_json coefficients(const IntPolynomial& p) {
  return nlohmann::ordered_json(std::vector<std::int64_t>(p.coefficients().begin(), p.coefficients().end()));
}

IntPolynomial from_coefficients(const nlohmann::ordered_json& j) {
  return IntPolynomial(j.get<std::vector<std::int64_t>>());
}

bool is_polynomial(const nlohmann::ordered_json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const auto& x) { return x.is_number_integer(); });
}

std::string latex_name(const std::string& key) {
  if (key == "P" || key == "Q" || key == "H") return key + "_{v,w}(q)";
  if (key == "Horacle") return "H^{\\mathrm{set}}_{v,w}(q)";
  if (key == "Htilde") return "\\widetilde{H}_{v,w}(q)";
  if (key == "mult") return "\\mathrm{mult}_{e_v}(X_w)";
  return "\\mathrm{" + key + "}";
}

ExampleCheck compare(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " " : "") + parts[k];
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "latex") return OutputFormat::Latex;
  throw Error(ErrorKind::ParseError, "unknown format '" + name + "'");
}

std::vector<std::string> parse_quantities(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (std::find(kQuantities.begin(), kQuantities.end(), item) == kQuantities.end()) {
      throw Error(ErrorKind::ParseError, "unknown quantity '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "no quantities requested");
  return out;
}

nlohmann::ordered_json cmd_compute(const ComputeRequest& request) {
  const Permutation& v = request.v;
  const Permutation& w = request.w;
  if (v.size() != w.size()) throw Error(ErrorKind::RankMismatch, v.to_string() + " and " + w.to_string());
  if (!bruhat_leq(v, w)) throw Error(ErrorKind::NotComparable, v.to_string() + " is not below " + w.to_string());
  const bool only_p = std::all_of(request.quantities.begin(), request.quantities.end(),
                                  [](const std::string& q) { return q == "P"; });
  if (!only_p && !is_covexillary(w)) {
    throw Error(ErrorKind::NotCovexillary,
                w.to_string() + " contains 3412; only P (the Hecke recursion) is available for it");
  }
  std::optional<PairGeometry> geometry;
  auto geo = [&]() -> const PairGeometry& {
    if (!geometry) geometry = make_pair_geometry(v, w);
    return *geometry;
  };

  nlohmann::ordered_json out;
  for (const std::string& q : request.quantities) {
    if (q == "P") {
      out[q] = coefficients(kl_polynomial(v, w));
    } else if (q == "Q") {
      out[q] = coefficients(q_polynomial(geo()));
    } else if (q == "H") {
      out[q] = coefficients(h_polynomial(geo()));
    } else if (q == "Horacle") {
      out[q] = coefficients(h_polynomial_setvalued_oracle(geo()));
    } else if (q == "Htilde") {
      out[q] = coefficients(htilde_determinant(v, w));
    } else if (q == "mult") {
      const auto& g = geo();
      out[q] = g.shape.empty() ? std::size_t{1} : count_flagged_ssyt(g.shape, g.flags);
    } else if (q == "complex") {
      const auto& g = geo();
      if (g.shape.empty()) {
        out[q] = nullptr;
        continue;
      }
      const TableauComplex c = build_drift_complex(g);
      const EulerData e = euler_characteristic(c);
      std::size_t interior = 0;
      for (const Face& f : c.faces) interior += f.interior ? 1 : 0;
      out[q] = {{"vertices", c.vertices.size()},
                {"faces", c.faces.size()},
                {"interior_faces", interior},
                {"facets", c.facet_count()},
                {"dimension", e.dimension},
                {"euler_characteristic", e.chi},
                {"classification", e.sphere ? "sphere" : "ball"}};
    } else if (q == "tree") {
      const auto& g = geo();
      if (g.shape.empty()) {
        out[q] = {{"edges", ""}, {"labelings", 1}};
        continue;
      }
      const LascouxTree t = lascoux_tree(g);
      out[q] = {{"edges", t.describe()}, {"labelings", enumerate_labelings(t).size()}};
    }
  }
  return out;
}

std::string render(const nlohmann::ordered_json& result, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json:
      out << result.dump();
      break;
    case OutputFormat::Csv:
      out << "quantity,value\n";
      for (const auto& [key, value] : result.items()) {
        out << key << ',';
        if (is_polynomial(value)) {
          for (std::size_t k = 0; k < value.size(); ++k) out << (k ? ";" : "") << value[k].get<std::int64_t>();
        } else if (value.is_number()) {
          out << value.dump();
        } else {
          std::string text = value.dump();
          std::string escaped;
          for (char ch : text) escaped += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          out << '"' << escaped << '"';
        }
        out << '\n';
      }
      break;
    case OutputFormat::Latex:
      out << "\\begin{align*}\n";
      for (const auto& [key, value] : result.items()) {
        out << latex_name(key) << " &= ";
        if (is_polynomial(value)) {
          out << from_coefficients(value).to_latex();
        } else if (value.is_number()) {
          out << value.dump();
        } else if (value.is_null()) {
          out << "\\varnothing";
        } else {
          out << "\\texttt{" << value.dump() << "}";
        }
        out << " \\\\\n";
      }
      out << "\\end{align*}";
      break;
  }
  std::string text = out.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::vector<ExampleCheck> reproduce_examples() {
  std::vector<ExampleCheck> out;
  const Permutation id5 = Permutation::identity(5);
  const Permutation w5 = parse_permutation("5,2,3,4,1");
  const PairGeometry g5 = make_pair_geometry(id5, w5);

  out.push_back(compare("H(12345,52341)", "1+3q+q^2", h_polynomial(g5).to_string()));
  {
    std::vector<std::string> sats;
    std::vector<std::string> ex;
    for (const auto& t : enumerate_flagged_ssyt(g5.shape, g5.flags)) {
      sats.push_back(saturate(t).to_string());
      ex.push_back(std::to_string(depth(t)));
    }
    out.push_back(compare("saturations of SSYT((2,1),(2,3))",
                          "[{1},{1}],[{2}] [{1},{1}],[{2,3}] [{1},{1,2}],[{2}] [{1},{1,2}],[{2,3}] [{1,2},{2}],[{3}]",
                          joined(sats)));
    out.push_back(compare("ex values", "0 1 1 2 1", joined(ex)));
  }
  out.push_back(compare("P(12345,52341)", "1+2q+q^2", kl_polynomial(id5, w5).to_string()));
  out.push_back(compare("drift(12345,52341) count", "4", std::to_string(enumerate_drift(g5).size())));
  out.push_back(compare("Q(12345,52341)", "1+2q+q^2", q_polynomial(g5).to_string()));

  const Permutation v10 = parse_permutation("2,3,4,6,5,1,7,8,9,10");
  const Permutation w10 = parse_permutation("10,9,5,4,3,8,2,7,6,1");
  const PairGeometry g10 = make_pair_geometry(v10, w10);
  out.push_back(compare("lambda(10954382761)", "(4,4,3)", g10.shape.to_string()));
  const auto configs = enumerate_drift(g10);
  out.push_back(compare("drift(2,3,4,6,5,1,7,8,9,10 / 10,9,5,4,3,8,2,7,6,1) count", "5", std::to_string(configs.size())));
  out.push_back(compare("Q(2,3,4,6,5,1,7,8,9,10 / 10,9,5,4,3,8,2,7,6,1)", "1+2q+q^2+q^3", q_polynomial(g10).to_string()));
  {
    std::set<std::string> images;
    for (const auto& d : configs) images.insert(psi(d, g10).to_string());
    std::string actual;
    for (const auto& s : images) actual += (actual.empty() ? "" : " ") + s;
    // Rows listed bottom to top.
    const std::set<std::string> expected_set = {
        "[1,1,1,1],[2,2,2,2],[3,3,3]", "[1,1,1,1],[2,2,2,2],[3,3,4]", "[1,1,1,2],[2,2,2,3],[3,3,3]",
        "[1,1,1,2],[2,2,3,3],[3,3,4]", "[1,1,1,2],[2,2,3,3],[3,4,4]"};
    std::string expected;
    for (const auto& s : expected_set) expected += (expected.empty() ? "" : " ") + s;
    out.push_back(compare("psi images for (4,4,3)", expected, actual));
  }
  out.push_back(compare("P(13425,34512)(1)", "3",
                        std::to_string(kl_polynomial(parse_permutation("1,3,4,2,5"), parse_permutation("3,4,5,1,2"))
                                           .evaluate(1))));
  {
    const Permutation w20 = parse_permutation("20,19,18,11,10,9,8,12,17,16,7,6,15,14,13,5,4,3,2,1");
    out.push_back(compare("continents of the S_20 example", "6",
                          std::to_string(continents(shape(w20)).size())));
  }
  return out;
}

}  // namespace driftkl
