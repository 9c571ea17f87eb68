#pragma once

#include <string>
#include <utility>
#include <vector>

#include "driftkl/drift.hpp"
#include "driftkl/multipoly.hpp"
#include "driftkl/polynomial.hpp"

namespace driftkl {

/// Continent index paired with a drift value. As a vertex of the complex it
/// stands for "remove `value` from continent `continent`".
struct DriftVertex {
  int continent = 0;
  int value = 0;

  friend bool operator==(const DriftVertex&, const DriftVertex&) = default;
  friend auto operator<=>(const DriftVertex&, const DriftVertex&) = default;
};

/// A nonempty sorted set of drift values per continent.
struct DriftTableau {
  std::vector<std::vector<int>> entries;

  int size() const noexcept;
  bool is_ordinary() const noexcept;
  std::string to_string() const;
  friend bool operator==(const DriftTableau&, const DriftTableau&) = default;
};

/// Every selection of one value per continent is a drift configuration.
bool is_semistandard(const DriftTableau& t, const PairGeometry& geometry);
/// Some selection is a drift configuration.
bool is_limit_semistandard(const DriftTableau& t, const PairGeometry& geometry);

/// A face lists the ground elements removed from the empty-face tableau.
struct Face {
  std::vector<int> removed;  // sorted ground indices
  bool interior = false;     // the remaining tableau is semistandard

  int dimension() const noexcept { return static_cast<int>(removed.size()) - 1; }
  friend bool operator==(const Face&, const Face&) = default;
};

struct TableauComplex {
  int continents = 0;
  std::vector<DriftConfiguration> configurations;
  /// E(C): union of the drift values of continent C over all configurations.
  std::vector<std::vector<int>> empty_face;
  /// Every (C, y) with y in E(C), phantom ones included. Index = variable
  /// index in K-polynomials.
  std::vector<DriftVertex> ground;
  /// Ground indices with |E(C)| > 1.
  std::vector<int> vertices;
  /// Sorted by removed set; the empty face comes first.
  std::vector<Face> faces;

  int dimension() const noexcept;
  std::size_t facet_count() const noexcept;
  bool has_face(const std::vector<int>& removed) const;
  DriftTableau tableau(const Face& f) const;
  int ground_index(const DriftVertex& v) const;  // -1 if absent
};

/// Throws Error{EmptyShape} when lambda(w) is empty.
TableauComplex build_drift_complex(const PairGeometry& geometry);
TableauComplex build_drift_complex(const Permutation& v, const Permutation& w);

struct EulerData {
  int chi = 0;
  int dimension = -1;
  bool sphere = false;  // no exterior faces
};

/// chi over nonempty faces. A sphere must have chi = 1 + (-1)^d and a ball
/// chi = 1; otherwise throws Error{ClassificationMismatch}.
EulerData euler_characteristic(const TableauComplex& c);

/// sum over faces F of prod_{u in F} t_u prod_{u in ground \ F} (1 - t_u),
/// with t_u = variable u.
MultiPoly k_polynomial(const TableauComplex& c);

/// sum over semistandard set-valued drift tableaux D of
///   beta^{|D| - #continents} prod_{(C,y) in D} (1 - t_{(C,y)}),
/// in variables t_u (u = ground index) and beta = variable ground.size().
MultiPoly hybrid_polynomial(const TableauComplex& c);
/// beta -> value; beta^0 reads as 1. Variables t_u remain.
MultiPoly hybrid_at_beta(const TableauComplex& c, int beta);
/// beta -> 0, t_{(C,y)} -> 1 - x_y. Variable y is x_y.
MultiPoly hybrid_x_series(const TableauComplex& c);
/// beta -> 0, t_{(C,y)} -> 1 - q^y.
IntPolynomial hybrid_q_series(const TableauComplex& c);

/// Deletion (faces avoiding v) and star (faces F with F + v a face).
/// `vertex` is a ground index. Throws Error{NoSuchVertex} unless it is a
/// proper vertex.
std::pair<TableauComplex, TableauComplex> vertex_decompose(const TableauComplex& c, int vertex);

/// K(c) = K(del) + t_v K(star), all over the same ground set.
bool vertex_decomposition_identity(const TableauComplex& c, int vertex);

}  // namespace driftkl
