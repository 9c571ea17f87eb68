#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "driftkl/drift.hpp"
#include "driftkl/tableaux.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace driftkl;

namespace {

const Permutation kId5 = Permutation::identity(5);
const Permutation kW5 = make_permutation({5, 2, 3, 4, 1});

FlaggedTableau t21(int a, int b, int c) { return FlaggedTableau(Partition({2, 1}), {{a, b}, {c}}); }

}  // namespace

TEST_CASE("flagged tableau basics") {
  CHECK(t21(1, 1, 2).is_semistandard());
  CHECK_FALSE(t21(2, 1, 3).is_semistandard());
  CHECK_FALSE(t21(1, 1, 1).is_semistandard());
  CHECK(t21(1, 2, 3).is_flagged(FlagVector({2, 3})));
  CHECK_FALSE(t21(1, 3, 3).is_flagged(FlagVector({2, 3})));
  CHECK(t21(1, 2, 3).to_string() == "[1,2],[3]");
  CHECK(kind_of([] { FlaggedTableau(Partition({2, 1}), {{1}, {2}}); }) == ErrorKind::InternalInvariant);
}

TEST_CASE("flagged SSYT enumeration") {
  const Partition l21({2, 1});
  CHECK(enumerate_flagged_ssyt(l21, FlagVector({2, 3})).size() == 5);
  const auto forced = enumerate_flagged_ssyt(l21, FlagVector({1, 2}));
  REQUIRE(forced.size() == 1);
  CHECK(forced.front() == t21(1, 1, 2));
  CHECK(count_flagged_ssyt(Partition{}, FlagVector{}) == 1);
  CHECK(kind_of([&] { count_flagged_ssyt(l21, FlagVector({2})); }) == ErrorKind::FlagMismatch);
  CHECK(kind_of([&] { enumerate_flagged_ssyt(l21, FlagVector({2, 3, 4})); }) == ErrorKind::FlagMismatch);

  for (const Partition& lambda : oracle::partitions_up_to(6)) {
    std::vector<int> rows(static_cast<std::size_t>(lambda.num_rows()));
    // Every weakly increasing flag with b_i >= i, entries up to 5.
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int low) {
      if (i == rows.size()) {
        const FlagVector flags(rows);
        const auto all = enumerate_flagged_ssyt(lambda, flags);
        REQUIRE(all.size() == oracle::count_flagged_ssyt(lambda, rows));
        REQUIRE(all.size() == count_flagged_ssyt(lambda, flags));
        REQUIRE(std::is_sorted(all.begin(), all.end()));
        for (const auto& t : all) REQUIRE(t.is_flagged(flags));
        return;
      }
      for (int b = std::max(low, static_cast<int>(i) + 1); b <= 5; ++b) {
        rows[i] = b;
        go(i + 1, b);
      }
    };
    go(0, 1);
  }
}

TEST_CASE("saturation and depth") {
  CHECK(saturate(t21(1, 2, 3)).to_string() == "[{1},{1,2}],[{2,3}]");
  CHECK(depth(t21(1, 2, 3)) == 2);
  CHECK(depth(t21(1, 1, 2)) == 0);
  CHECK(saturate(t21(1, 1, 2)).excess() == 0);

  std::vector<std::string> sats;
  std::vector<int> ex;
  const PairGeometry g = make_pair_geometry(kId5, kW5);
  for (const auto& t : enumerate_flagged_ssyt(g.shape, g.flags)) {
    sats.push_back(saturate(t).to_string());
    ex.push_back(depth(t));
  }
  CHECK(sats == std::vector<std::string>{"[{1},{1}],[{2}]", "[{1},{1}],[{2,3}]", "[{1},{1,2}],[{2}]",
                                         "[{1},{1,2}],[{2,3}]", "[{1,2},{2}],[{3}]"});
  CHECK(ex == std::vector<int>{0, 1, 1, 2, 1});
}

TEST_CASE("sat and sup are inverse bijections") {
  for (const Partition& lambda : oracle::partitions_up_to(5)) {
    std::vector<int> rows;
    for (int i = 1; i <= lambda.num_rows(); ++i) rows.push_back(i + 2);
    const FlagVector flags(rows);
    std::set<FlaggedTableau> from_sat;
    for (const auto& t : enumerate_flagged_ssyt(lambda, flags)) {
      const SetValuedTableau u = saturate(t);
      REQUIRE(u.is_flagged(flags));
      REQUIRE(is_lower_saturated(u));
      REQUIRE(sup(u) == t);
      REQUIRE(u.excess() == depth(t));
      from_sat.insert(t);
    }
    std::size_t saturated = 0;
    for_each_setvalued(lambda, flags, [&](const SetValuedTableau& u) {
      REQUIRE(u.is_flagged(flags));
      if (!is_lower_saturated(u)) return;
      ++saturated;
      REQUIRE(saturate(sup(u)) == u);
    });
    REQUIRE(saturated == from_sat.size());
  }
}

TEST_CASE("H polynomial and its set-valued oracle") {
  CHECK(h_polynomial(kId5, kW5) == IntPolynomial{1, 3, 1});
  CHECK(h_polynomial(kW5, kW5) == IntPolynomial{1});
  CHECK(h_polynomial(make_permutation({3, 2, 1, 4, 5}), kW5) == IntPolynomial{1, 1});
  CHECK(h_polynomial_setvalued_oracle(kId5, kW5) == IntPolynomial{1, 3, 1});
  CHECK(enumerate_setvalued(Partition({2, 1}), FlagVector({2, 3})).size() == 11);
  CHECK(h_polynomial_setvalued_oracle(kW5, kW5) == IntPolynomial{1});
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [v, w] : oracle::covexillary_pairs(n)) {
      const PairGeometry g = make_pair_geometry(v, w);
      const IntPolynomial h = h_polynomial(g);
      REQUIRE(h == h_polynomial_setvalued_oracle(g));
      if (!g.shape.empty()) {
        REQUIRE(h.evaluate(1) == static_cast<std::int64_t>(count_flagged_ssyt(g.shape, g.flags)));
      }
    }
  }
}

TEST_CASE("psi on the small example") {
  const PairGeometry g = make_pair_geometry(kId5, kW5);
  CHECK(psi(DriftConfiguration{{0, 0}}, g) == t21(1, 1, 2));
  CHECK(psi(DriftConfiguration{{1, 1}}, g) == t21(1, 2, 3));
  CHECK(is_in_psi_image(t21(1, 2, 3), g));
  CHECK_FALSE(is_in_psi_image(t21(2, 2, 3), g));
  CHECK(prescription(t21(2, 2, 3), 1, 1) == 1);
  int in_image = 0;
  for (const auto& t : enumerate_flagged_ssyt(g.shape, g.flags)) in_image += is_in_psi_image(t, g) ? 1 : 0;
  CHECK(in_image == 4);

  const auto path = augmentation_path(t21(2, 2, 3), g);
  REQUIRE(path.size() == 2);
  CHECK(path.back() == t21(1, 2, 3));
  CHECK(depth(path.front()) == 1);
  CHECK(depth(path.back()) == 2);
  CHECK(augment_to_image(t21(1, 1, 2), g) == t21(1, 1, 2));
  CHECK(augment_to_image(t21(1, 2, 3), g) == t21(1, 2, 3));
}

TEST_CASE("psi is a weight-preserving injection onto the predicate") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [v, w] : oracle::covexillary_pairs(n)) {
      const PairGeometry g = make_pair_geometry(v, w);
      if (g.shape.empty()) continue;
      std::set<FlaggedTableau> images;
      for (const auto& d : enumerate_drift(g)) {
        const FlaggedTableau t = psi(d, g);
        REQUIRE(depth(t) == d.weight());
        REQUIRE(images.insert(t).second);
      }
      for (const auto& t : enumerate_flagged_ssyt(g.shape, g.flags)) {
        REQUIRE(is_in_psi_image(t, g) == (images.count(t) > 0));
        const auto path = augmentation_path(t, g);
        for (std::size_t k = 1; k < path.size(); ++k) REQUIRE(depth(path[k]) >= depth(path[k - 1]));
        REQUIRE(images.count(path.back()) == 1);
      }
    }
  }
}
