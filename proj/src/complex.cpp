#include "driftkl/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "driftkl/error.hpp"

namespace driftkl {
namespace {

/// Visits every selection of one value per continent; stops early when
/// `visit` returns false. Returns false iff stopped.
bool for_each_selection(const DriftTableau& t, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> pick(t.entries.size(), 0);
  std::function<bool(std::size_t)> recurse = [&](std::size_t k) {
    if (k == t.entries.size()) return visit(pick);
    for (int y : t.entries[k]) {
      pick[k] = y;
      if (!recurse(k + 1)) return false;
    }
    return true;
  };
  return recurse(0);
}

MultiPoly face_term(const std::vector<int>& removed, std::size_t ground_size) {
  MultiPoly term = MultiPoly::constant(1);
  std::size_t next = 0;
  for (std::size_t u = 0; u < ground_size; ++u) {
    const int idx = static_cast<int>(u);
    if (next < removed.size() && removed[next] == idx) {
      term *= MultiPoly::variable(idx);
      ++next;
    } else {
      term *= MultiPoly::one_minus(idx);
    }
  }
  return term;
}

}  // namespace

int DriftTableau::size() const noexcept {
  int total = 0;
  for (const auto& e : entries) total += static_cast<int>(e.size());
  return total;
}

bool DriftTableau::is_ordinary() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.size() == 1; });
}

std::string DriftTableau::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out << (k ? " " : "") << '{';
    for (std::size_t i = 0; i < entries[k].size(); ++i) out << (i ? "," : "") << entries[k][i];
    out << '}';
  }
  return out.str();
}

bool is_semistandard(const DriftTableau& t, const PairGeometry& geometry) {
  return for_each_selection(t, [&](const std::vector<int>& pick) { return is_valid_drift(geometry, pick); });
}

bool is_limit_semistandard(const DriftTableau& t, const PairGeometry& geometry) {
  return !for_each_selection(t, [&](const std::vector<int>& pick) { return !is_valid_drift(geometry, pick); });
}

int TableauComplex::dimension() const noexcept {
  int d = -1;
  for (const Face& f : faces) d = std::max(d, f.dimension());
  return d;
}

std::size_t TableauComplex::facet_count() const noexcept {
  // Facets remove everything but one value per continent.
  std::size_t ground_size = ground.size();
  std::size_t count = 0;
  for (const Face& f : faces) {
    if (f.removed.size() + static_cast<std::size_t>(continents) == ground_size) ++count;
  }
  return count;
}

bool TableauComplex::has_face(const std::vector<int>& removed) const {
  return std::binary_search(faces.begin(), faces.end(), Face{removed, false},
                            [](const Face& a, const Face& b) { return a.removed < b.removed; });
}

DriftTableau TableauComplex::tableau(const Face& f) const {
  DriftTableau t;
  t.entries.resize(static_cast<std::size_t>(continents));
  for (std::size_t u = 0; u < ground.size(); ++u) {
    if (!std::binary_search(f.removed.begin(), f.removed.end(), static_cast<int>(u))) {
      t.entries[static_cast<std::size_t>(ground[u].continent)].push_back(ground[u].value);
    }
  }
  return t;
}

int TableauComplex::ground_index(const DriftVertex& v) const {
  const auto it = std::lower_bound(ground.begin(), ground.end(), v);
  return it != ground.end() && *it == v ? static_cast<int>(it - ground.begin()) : -1;
}

TableauComplex build_drift_complex(const PairGeometry& geometry) {
  if (geometry.shape.empty()) throw Error(ErrorKind::EmptyShape, "the complex needs a nonempty shape");
  TableauComplex c;
  c.continents = geometry.pangaea.size();
  c.configurations = enumerate_drift(geometry);
  const std::size_t k = static_cast<std::size_t>(c.continents);
  c.empty_face.assign(k, {});
  for (const auto& d : c.configurations) {
    for (std::size_t i = 0; i < k; ++i) c.empty_face[i].push_back(d.drift[i]);
  }
  for (auto& e : c.empty_face) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  std::vector<int> offset(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    offset[i + 1] = offset[i] + static_cast<int>(c.empty_face[i].size());
    for (int y : c.empty_face[i]) {
      if (c.empty_face[i].size() > 1) c.vertices.push_back(static_cast<int>(c.ground.size()));
      c.ground.push_back({static_cast<int>(i), y});
    }
  }

  // Choose D(C) continent by continent, keeping only the configurations that
  // still fit inside the partial tableau.
  std::vector<unsigned> mask(k, 0);
  std::vector<std::size_t> all(c.configurations.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::function<void(std::size_t, const std::vector<std::size_t>&, std::size_t)> recurse =
      [&](std::size_t i, const std::vector<std::size_t>& alive, std::size_t selections) {
        if (i == k) {
          Face f;
          for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t b = 0; b < c.empty_face[j].size(); ++b) {
              if (!(mask[j] & (1u << b))) f.removed.push_back(offset[j] + static_cast<int>(b));
            }
          }
          f.interior = alive.size() == selections;
          c.faces.push_back(std::move(f));
          return;
        }
        const auto& values = c.empty_face[i];
        for (unsigned m = 1; m < (1u << values.size()); ++m) {
          std::vector<std::size_t> keep;
          for (std::size_t idx : alive) {
            const int y = c.configurations[idx].drift[i];
            const auto pos = std::lower_bound(values.begin(), values.end(), y) - values.begin();
            if (m & (1u << pos)) keep.push_back(idx);
          }
          if (keep.empty()) continue;
          mask[i] = m;
          recurse(i + 1, keep, selections * static_cast<std::size_t>(__builtin_popcount(m)));
        }
      };
  recurse(0, all, 1);
  std::sort(c.faces.begin(), c.faces.end(), [](const Face& a, const Face& b) { return a.removed < b.removed; });
  return c;
}

TableauComplex build_drift_complex(const Permutation& v, const Permutation& w) {
  return build_drift_complex(make_pair_geometry(v, w));
}

EulerData euler_characteristic(const TableauComplex& c) {
  EulerData out;
  out.dimension = c.dimension();
  out.sphere = std::all_of(c.faces.begin(), c.faces.end(), [](const Face& f) { return f.interior; });
  for (const Face& f : c.faces) {
    if (f.removed.empty()) continue;
    out.chi += f.dimension() % 2 == 0 ? 1 : -1;
  }
  const int expected = out.sphere ? 1 + (out.dimension % 2 == 0 ? 1 : -1) : 1;
  if (out.chi != expected) {
    throw Error(ErrorKind::ClassificationMismatch,
                std::string(out.sphere ? "sphere" : "ball") + " of dimension " + std::to_string(out.dimension) +
                    " has chi " + std::to_string(out.chi));
  }
  return out;
}

MultiPoly k_polynomial(const TableauComplex& c) {
  MultiPoly out;
  for (const Face& f : c.faces) out += face_term(f.removed, c.ground.size());
  return out;
}

MultiPoly hybrid_polynomial(const TableauComplex& c) {
  const int beta = static_cast<int>(c.ground.size());
  MultiPoly out;
  for (const Face& f : c.faces) {
    if (!f.interior) continue;
    MultiPoly term = MultiPoly::constant(1);
    const int extras = static_cast<int>(c.ground.size() - f.removed.size()) - c.continents;
    for (int e = 0; e < extras; ++e) term *= MultiPoly::variable(beta);
    for (std::size_t u = 0; u < c.ground.size(); ++u) {
      if (!std::binary_search(f.removed.begin(), f.removed.end(), static_cast<int>(u))) {
        term *= MultiPoly::one_minus(static_cast<int>(u));
      }
    }
    out += term;
  }
  return out;
}

MultiPoly hybrid_at_beta(const TableauComplex& c, int beta) {
  return hybrid_polynomial(c).substitute(static_cast<int>(c.ground.size()), MultiPoly::constant(beta));
}

MultiPoly hybrid_x_series(const TableauComplex& c) {
  // Ground variables and x_y share index space, so substitute all at once.
  std::vector<MultiPoly> values;
  for (const DriftVertex& g : c.ground) values.push_back(MultiPoly::one_minus(g.value));
  values.push_back(MultiPoly::constant(0));  // beta
  return hybrid_polynomial(c).substitute_all(values);
}

IntPolynomial hybrid_q_series(const TableauComplex& c) {
  const MultiPoly x = hybrid_x_series(c);
  int top = 0;
  for (const auto& [m, coeff] : x.terms()) top = std::max(top, static_cast<int>(m.size()));
  std::vector<int> exponents(static_cast<std::size_t>(top));
  for (int y = 0; y < top; ++y) exponents[static_cast<std::size_t>(y)] = y;
  return x.principal(exponents);
}

std::pair<TableauComplex, TableauComplex> vertex_decompose(const TableauComplex& c, int vertex) {
  if (!std::binary_search(c.vertices.begin(), c.vertices.end(), vertex)) {
    throw Error(ErrorKind::NoSuchVertex, "ground element " + std::to_string(vertex) + " is not a vertex");
  }
  TableauComplex del = c;
  TableauComplex star = c;
  del.faces.clear();
  star.faces.clear();
  for (const Face& f : c.faces) {
    const bool contains = std::binary_search(f.removed.begin(), f.removed.end(), vertex);
    if (!contains) del.faces.push_back(f);
    std::vector<int> joined = f.removed;
    if (!contains) joined.insert(std::lower_bound(joined.begin(), joined.end(), vertex), vertex);
    if (c.has_face(joined)) star.faces.push_back(f);
  }
  return {std::move(del), std::move(star)};
}

bool vertex_decomposition_identity(const TableauComplex& c, int vertex) {
  const auto [del, star] = vertex_decompose(c, vertex);
  return k_polynomial(c) == k_polynomial(del) + MultiPoly::variable(vertex) * k_polynomial(star);
}

}  // namespace driftkl
