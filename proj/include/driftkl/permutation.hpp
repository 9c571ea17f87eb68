#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace driftkl {

/// An element of the symmetric group S_n in one-line notation.
///
/// Positions and values are 1-based: `w(i)` is the image of i. A
/// default-constructed Permutation is an empty placeholder (n = 0); every
/// permutation produced by make_permutation has n >= 1.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> values() const noexcept { return values_; }

  bool is_identity() const noexcept;

  /// "5,2,3,4,1"
  std::string to_string() const;
  /// "52341" for n <= 9, otherwise the comma form.
  std::string compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation make_permutation(std::span<const int> values);
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;
};

/// Throws Error{NotABijection} unless values is a bijection onto {1..n}.
Permutation make_permutation(std::span<const int> values);
Permutation make_permutation(std::initializer_list<int> values);

/// Parses "5,2,3,4,1" (whitespace tolerated). Throws Error{ParseError} on
/// malformed text and Error{NotABijection} on a bad value set.
Permutation parse_permutation(std::string_view text);

Permutation inverse(const Permutation& w);

/// result(i) = w(v(i)). Throws Error{RankMismatch} if sizes differ.
Permutation compose(const Permutation& w, const Permutation& v);

Permutation longest_element(int n);

/// Number of inversions.
int coxeter_length(const Permutation& w);

/// Bruhat order by the rank criterion: v <= w iff for every i, j
/// #{k <= i : v(k) >= j} <= #{k <= i : w(k) >= j}.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// True iff w avoids the pattern 3412.
bool is_covexillary(const Permutation& w);

/// Left multiplication by the simple transposition s_i = (i, i+1): swaps the
/// values i and i+1 in one-line notation.
Permutation left_multiply_simple(int i, const Permutation& w);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Lexicographic rank in S_n (0-based), the inverse of all_permutations.
std::size_t lex_rank(const Permutation& w);

}  // namespace driftkl

template <>
struct std::hash<driftkl::Permutation> {
  std::size_t operator()(const driftkl::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.values()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};
