#include <doctest.h>

#include "driftkl/complex.hpp"
#include "driftkl/hecke.hpp"
#include "driftkl/multipoly.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace driftkl;

namespace {

const Permutation kId5 = Permutation::identity(5);
const Permutation kW5 = make_permutation({5, 2, 3, 4, 1});

std::vector<std::int64_t> filled(std::int64_t value) { return std::vector<std::int64_t>(32, value); }

}  // namespace

TEST_CASE("multivariate polynomial arithmetic") {
  const MultiPoly x = MultiPoly::variable(0);
  const MultiPoly y = MultiPoly::variable(1);
  const MultiPoly p = (x + y) * (x - y);
  CHECK(p.coeff({2}) == 1);
  CHECK(p.coeff({0, 2}) == -1);
  CHECK(p.coeff({1, 1}) == 0);
  CHECK(MultiPoly::one_minus(2) == MultiPoly::constant(1) - MultiPoly::variable(2));
  CHECK(p.substitute(1, MultiPoly::constant(0)) == x * x);
  CHECK(p.substitute_all({y, x}) == (y + x) * (y - x));
  CHECK(p.evaluate({3, 2}) == 5);
  CHECK(p.principal({1, 2}) == IntPolynomial{0, 0, 1, 0, -1});
  CHECK((p - p).is_zero());
}

TEST_CASE("the 4-cycle complex") {
  const TableauComplex c = build_drift_complex(kId5, kW5);
  CHECK(c.continents == 2);
  CHECK(c.vertices.size() == 4);
  CHECK(c.facet_count() == 4);
  CHECK(c.dimension() == 1);
  CHECK(c.faces.size() == 9);
  CHECK(c.faces.front().removed.empty());
  const EulerData e = euler_characteristic(c);
  CHECK(e.chi == 0);
  CHECK(e.sphere);
  CHECK(e.dimension == 1);
  for (const Face& f : c.faces) CHECK(f.interior);

  for (int u : c.vertices) {
    const auto [del, star] = vertex_decompose(c, u);
    CHECK(del.faces.size() == 6);
    CHECK(del.facet_count() == 2);
    CHECK(star.faces.size() == 6);
    CHECK(star.facet_count() == 2);
    CHECK(vertex_decomposition_identity(c, u));
    CHECK(k_polynomial(c) == k_polynomial(del) + MultiPoly::variable(u) * k_polynomial(star));
  }
  CHECK(kind_of([&] { vertex_decompose(c, 99); }) == ErrorKind::NoSuchVertex);
}

TEST_CASE("hybrid polynomial specializations") {
  const TableauComplex c = build_drift_complex(kId5, kW5);
  CHECK(hybrid_q_series(c) == IntPolynomial{1, 2, 1});
  CHECK(hybrid_x_series(c).evaluate(filled(1)) == 4);
  CHECK(hybrid_at_beta(c, 0).evaluate(filled(0)) == static_cast<std::int64_t>(c.facet_count()));
  CHECK(hybrid_at_beta(c, -1) == k_polynomial(c));
}

TEST_CASE("the worked example complex is a 2-ball") {
  const TableauComplex c =
      build_drift_complex(parse_permutation("2,3,4,6,5,1,7,8,9,10"), parse_permutation("10,9,5,4,3,8,2,7,6,1"));
  CHECK(c.facet_count() == 5);
  CHECK(c.faces.size() == 22);
  CHECK(c.vertices.size() == 6);
  const EulerData e = euler_characteristic(c);
  CHECK(e.dimension == 2);
  CHECK(e.chi == 1);
  CHECK_FALSE(e.sphere);
  CHECK(hybrid_q_series(c) == IntPolynomial{1, 2, 1, 1});
}

TEST_CASE("a single configuration gives the empty sphere") {
  const TableauComplex c = build_drift_complex(kW5, kW5);
  CHECK(c.facet_count() == 1);
  CHECK(c.vertices.empty());
  CHECK(c.dimension() == -1);
  const EulerData e = euler_characteristic(c);
  CHECK(e.chi == 0);
  CHECK(e.sphere);
  CHECK(kind_of([&] { vertex_decompose(c, 0); }) == ErrorKind::NoSuchVertex);
  CHECK(kind_of([] { build_drift_complex(longest_element(3), longest_element(3)); }) == ErrorKind::EmptyShape);
}

TEST_CASE("drift tableaux") {
  const PairGeometry g = make_pair_geometry(kId5, kW5);
  const DriftTableau full{{{0, 1}, {0, 1}}};
  CHECK_FALSE(full.is_ordinary());
  CHECK(full.size() == 4);
  CHECK(is_semistandard(full, g));
  CHECK(is_limit_semistandard(full, g));
  CHECK(is_semistandard(DriftTableau{{{1}, {0}}}, g));
}

TEST_CASE("complex invariants on every covexillary pair up to S_5") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [v, w] : oracle::covexillary_pairs(n)) {
      const PairGeometry g = make_pair_geometry(v, w);
      if (g.shape.empty()) continue;
      const TableauComplex c = build_drift_complex(g);
      REQUIRE(c.facet_count() == enumerate_drift(g).size());
      for (const Face& f : c.faces) {
        const DriftTableau t = c.tableau(f);
        REQUIRE(is_limit_semistandard(t, g));
        REQUIRE(f.interior == is_semistandard(t, g));
      }
      const EulerData e = euler_characteristic(c);
      REQUIRE(e.chi == (e.sphere ? 1 + (e.dimension % 2 == 0 ? 1 : -1) : 1));
      REQUIRE(hybrid_q_series(c) == kl_polynomial(v, w));
      REQUIRE(hybrid_at_beta(c, -1) == k_polynomial(c));
      for (int u : c.vertices) REQUIRE(vertex_decomposition_identity(c, u));
    }
  }
}
