#include <doctest.h>

#include <map>
#include <set>

#include "driftkl/diagram.hpp"
#include "driftkl/permutation.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace driftkl;

namespace {

const Permutation kW5 = make_permutation({5, 2, 3, 4, 1});
const Permutation kV10 = parse_permutation("2,3,4,6,5,1,7,8,9,10");
const Permutation kW10 = parse_permutation("10,9,5,4,3,8,2,7,6,1");

std::set<Box> diagram_by_definition(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = inverse(w);
  std::set<Box> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i < n - w(j) + 1 && j < winv(n - i + 1)) out.insert({i, j});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("flipped diagram") {
  CHECK(flipped_diagram(kW5) == BoxSet{{2, 2}, {2, 3}, {3, 2}});
  CHECK(flipped_diagram(longest_element(6)).empty());
  CHECK(flipped_diagram(Permutation::identity(3)) == BoxSet{{1, 1}, {1, 2}, {2, 1}});
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto d = flipped_diagram(w);
      REQUIRE(std::set<Box>(d.begin(), d.end()) == diagram_by_definition(w));
    }
  }
}

TEST_CASE("graph dots") {
  CHECK(graph_dots(Permutation::identity(5)) == BoxSet{{1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}});
  CHECK(graph_dots(longest_element(3)) == BoxSet{{1, 1}, {2, 2}, {3, 3}});
  CHECK(graph_dots(kW5) == BoxSet{{1, 1}, {2, 4}, {3, 3}, {4, 2}, {5, 5}});
}

TEST_CASE("essential set") {
  CHECK(essential_set(kW5) == BoxSet{{2, 3}, {3, 2}});
  CHECK(essential_set(longest_element(5)).empty());
  CHECK(essential_set(kW10).size() == 2);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto d = diagram_by_definition(w);
      std::set<Box> expected;
      for (const Box& b : d) {
        if (!d.count({b.row + 1, b.col}) && !d.count({b.row, b.col + 1})) expected.insert(b);
      }
      const auto e = essential_set(w);
      REQUIRE(std::set<Box>(e.begin(), e.end()) == expected);
    }
  }
}

TEST_CASE("shape") {
  CHECK(shape(kW5) == Partition({2, 1}));
  CHECK(shape(kW10) == Partition({4, 4, 3}));
  CHECK(shape(longest_element(4)).empty());
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : all_permutations(n)) {
      const Partition lambda = shape(w);
      REQUIRE(lambda.size() + coxeter_length(w) == n * (n - 1) / 2);
      if (n <= 6 && is_covexillary(w)) REQUIRE(lambda == shape(inverse(w)));
    }
  }
}

TEST_CASE("partition helpers") {
  const Partition p({4, 4, 3});
  CHECK(p.size() == 11);
  CHECK(p[1] == 4);
  CHECK(p[4] == 0);
  CHECK(p.column_height(4) == 2);
  CHECK(p.corners() == BoxSet{{2, 4}, {3, 3}});
  CHECK(p.contains({3, 3}));
  CHECK_FALSE(p.contains({3, 4}));
  CHECK(Partition({3, 1}).contained_in(p));
  CHECK_FALSE(Partition({5}).contained_in(p));
  CHECK(partition_hull({{2, 1}, {2, 3}, {1, 1}}) == Partition({3, 3}));
  CHECK(kind_of([] { Partition({1, 2}); }) == ErrorKind::InternalInvariant);
  CHECK(kind_of([] { Partition({2, 0}); }) == ErrorKind::InternalInvariant);
}

TEST_CASE("rank southwest") {
  CHECK(rank_sw(Permutation::identity(5), {3, 2}) == 0);
  CHECK(rank_sw(kW5, {5, 5}) == 5);
  CHECK(rank_sw(kW5, {3, 2}) == 1);
  CHECK(kind_of([] { rank_sw(kW5, {6, 1}); }) == ErrorKind::BoxOutOfGrid);
  CHECK(kind_of([] { rank_sw(kW5, {0, 1}); }) == ErrorKind::BoxOutOfGrid);
}

TEST_CASE("shifted essential set, arena, and flags") {
  const Permutation id5 = Permutation::identity(5);
  const Permutation v = make_permutation({3, 2, 1, 4, 5});
  CHECK(theta_essential(id5, kW5) == BoxSet{{2, 3}, {3, 2}});
  CHECK(theta_essential(v, kW5) == BoxSet{{2, 1}, {2, 3}});
  CHECK(bounding_partition(id5, kW5) == Partition({3, 3, 2}));
  CHECK(bounding_partition(v, kW5) == Partition({3, 3}));
  CHECK(flag_vector(id5, kW5) == FlagVector({2, 3}));
  CHECK(flag_vector(v, kW5) == FlagVector({2, 2}));
  CHECK(bounding_partition(kV10, kW10) == Partition({5, 5, 5, 4}));
  CHECK(flag_vector(kV10, kW10) == FlagVector({2, 3, 4}));

  CHECK(kind_of([] { flag_vector(Permutation::identity(3), longest_element(3)); }) == ErrorKind::EmptyShape);
  CHECK(kind_of([&] { theta_essential(kW5, id5); }) == ErrorKind::NotComparable);
  CHECK(kind_of([] { theta_essential(Permutation::identity(4), make_permutation({3, 4, 1, 2})); }) ==
        ErrorKind::NotCovexillary);
  CHECK(kind_of([&] { theta_essential(Permutation::identity(4), kW5); }) == ErrorKind::RankMismatch);
}

TEST_CASE("arena and flag properties over all covexillary pairs") {
  for (int n = 2; n <= 6; ++n) {
    const auto pairs = oracle::covexillary_pairs(n);
    for (const auto& [v, w] : pairs) {
      const Partition arena = bounding_partition(v, w);
      REQUIRE(arena.contains({1, 1}));
      for (const Box& b : theta_essential(v, w)) REQUIRE(arena.contains(b));
      REQUIRE(arena == bounding_partition(inverse(v), inverse(w)));
      const Partition lambda = shape(w);
      if (lambda.empty()) continue;
      const FlagVector flags = flag_vector(v, w);
      REQUIRE(flags.size() == lambda.num_rows());
      for (int i = 1; i <= flags.size(); ++i) {
        REQUIRE(flags[i] >= i);
        if (i > 1) REQUIRE(flags[i] >= flags[i - 1]);
      }
    }
    if (n > 5) continue;
    // v' <= v <= w: the arena grows and the flags loosen as v goes down.
    std::map<Permutation, std::vector<Permutation>> below;
    for (const auto& [v, w] : pairs) below[w].push_back(v);
    for (const auto& [w, vs] : below) {
      if (shape(w).empty()) continue;
      for (const auto& v : vs) {
        for (const auto& vp : vs) {
          if (!bruhat_leq(vp, v)) continue;
          REQUIRE(bounding_partition(v, w).contained_in(bounding_partition(vp, w)));
          REQUIRE(flag_vector(v, w).leq(flag_vector(vp, w)));
        }
      }
    }
  }
}
