#include <doctest.h>

#include <random>

#include "driftkl/error.hpp"
#include "driftkl/permutation.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace driftkl;

TEST_CASE("construction validates the value set") {
  const Permutation w = make_permutation({5, 2, 3, 4, 1});
  CHECK(w.size() == 5);
  CHECK(w(1) == 5);
  CHECK(make_permutation({1, 2, 3}).is_identity());
  CHECK(kind_of([] { make_permutation({2, 2, 1}); }) == ErrorKind::NotABijection);
  CHECK(kind_of([] { make_permutation({0, 1}); }) == ErrorKind::NotABijection);
  CHECK(kind_of([] { make_permutation({1, 3}); }) == ErrorKind::NotABijection);
  CHECK(kind_of([] { parse_permutation("1,,2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_permutation("1,x"); }) == ErrorKind::ParseError);
  CHECK(parse_permutation(" 5, 2,3 ,4,1") == w);
  CHECK(w.to_string() == "5,2,3,4,1");
  CHECK(w.compact() == "52341");
  CHECK(Permutation::identity(10).compact() == "1,2,3,4,5,6,7,8,9,10");
}

TEST_CASE("inverse, compose, longest element") {
  CHECK(inverse(make_permutation({5, 2, 3, 4, 1})) == make_permutation({5, 2, 3, 4, 1}));
  CHECK(inverse(make_permutation({3, 4, 5, 1, 2})) == make_permutation({4, 5, 1, 2, 3}));
  CHECK(inverse(Permutation::identity(4)).is_identity());
  CHECK(compose(make_permutation({2, 1, 3}), make_permutation({1, 3, 2})) == make_permutation({2, 3, 1}));
  CHECK(longest_element(3) == make_permutation({3, 2, 1}));
  CHECK(longest_element(1) == make_permutation({1}));
  CHECK(kind_of([] { compose(Permutation::identity(2), Permutation::identity(3)); }) == ErrorKind::RankMismatch);

  std::mt19937 rng(7);
  const auto perms = all_permutations(5);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = perms[pick(rng)];
    const auto& b = perms[pick(rng)];
    const auto& c = perms[pick(rng)];
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(inverse(inverse(a)) == a);
    CHECK(compose(a, inverse(a)).is_identity());
  }
}

TEST_CASE("length counts inversions") {
  CHECK(coxeter_length(make_permutation({5, 2, 3, 4, 1})) == 7);
  CHECK(coxeter_length(Permutation::identity(5)) == 0);
  CHECK(coxeter_length(longest_element(5)) == 10);
  for (const auto& w : all_permutations(6)) REQUIRE(coxeter_length(w) == oracle::inversions(w));
}

TEST_CASE("lex rank inverts enumeration") {
  const auto perms = all_permutations(5);
  REQUIRE(perms.size() == 120);
  for (std::size_t k = 0; k < perms.size(); ++k) REQUIRE(lex_rank(perms[k]) == k);
}

TEST_CASE("left multiplication by a simple transposition swaps values") {
  const Permutation w = make_permutation({3, 1, 4, 2});
  CHECK(left_multiply_simple(1, w) == make_permutation({3, 2, 4, 1}));
  CHECK(left_multiply_simple(3, w) == make_permutation({4, 1, 3, 2}));
}

TEST_CASE("Bruhat order matches the transposition-closure oracle") {
  CHECK(bruhat_leq(make_permutation({1, 3, 4, 2, 5}), make_permutation({3, 4, 5, 1, 2})));
  CHECK_FALSE(bruhat_leq(make_permutation({2, 1, 3}), make_permutation({1, 2, 3})));
  CHECK(kind_of([] { bruhat_leq(Permutation::identity(2), Permutation::identity(3)); }) == ErrorKind::RankMismatch);
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& w : perms) {
      const auto below = oracle::lower_interval(w);
      for (const auto& v : perms) {
        const bool leq = bruhat_leq(v, w);
        REQUIRE(leq == (below.count(v) > 0));
        if (leq) REQUIRE(coxeter_length(v) <= coxeter_length(w));
      }
    }
  }
}

TEST_CASE("covexillary means 3412-avoiding") {
  CHECK_FALSE(is_covexillary(make_permutation({3, 4, 1, 2})));
  CHECK(is_covexillary(make_permutation({5, 2, 3, 4, 1})));
  CHECK_FALSE(is_covexillary(make_permutation({3, 4, 5, 1, 2})));
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    for (const auto& w : all_permutations(n)) {
      REQUIRE(is_covexillary(w) == is_covexillary(inverse(w)));
      count += is_covexillary(w) ? 1 : 0;
    }
    // 3412-avoiders are counted by the same sequence as 1234-avoiders.
    static const int expected[] = {0, 1, 2, 6, 23, 103, 513};
    CHECK(count == expected[n]);
  }
}
