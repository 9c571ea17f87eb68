#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "driftkl/diagram.hpp"
#include "driftkl/permutation.hpp"
#include "driftkl/polynomial.hpp"

namespace driftkl {

struct SpecialBox {
  Box box;
  int level = 0;  // z in "z-special"

  friend bool operator==(const SpecialBox&, const SpecialBox&) = default;
};

/// Sorted by box.
using SpecialBoxes = std::vector<SpecialBox>;

/// Iterative z-special selection: at each level z the candidates are boxes
/// with |arm| = |leg| whose hook holds no box special at a lower level; the
/// maximally northeast candidates become z-special. Throws
/// Error{AmbiguousMaximum} if two selected boxes of one level have
/// intersecting hooks.
SpecialBoxes special_boxes_greedy(const Partition& lambda);

/// Special boxes from matched pairs of the boundary parenthesis word: '('
/// per east step (column c), ')' per south step (row r); a matched pair gives
/// box (r, c) whose level is its nesting depth counted from the innermost.
SpecialBoxes special_boxes_parens(const Partition& lambda);

/// Continents of lambda. continents[k] is governed by specials[k].
struct Pangaea {
  SpecialBoxes specials;
  std::vector<BoxSet> continents;
  BoxSet reference;

  int size() const noexcept { return static_cast<int>(specials.size()); }
  /// Index of the continent holding b, or -1 for the reference continent.
  int continent_of(const Box& b) const;
};

/// Throws Error{InternalInvariant} if some box has two incomparable maximal
/// special boxes weakly southwest of it.
Pangaea continents(const Partition& lambda);

/// Everything the drift and tableau rules need about a covexillary pair.
struct PairGeometry {
  Permutation v;
  Permutation w;
  Partition shape;  // lambda(w)
  Partition arena;  // B(v,w)
  FlagVector flags;  // empty when shape is empty
  Pangaea pangaea;   // empty when shape is empty
};

/// Validates v <= w, w covexillary.
PairGeometry make_pair_geometry(const Permutation& v, const Permutation& w);

/// Diagonal drift distance per continent, indexed like Pangaea::continents.
struct DriftConfiguration {
  std::vector<int> drift;

  int weight() const noexcept;
  friend bool operator==(const DriftConfiguration&, const DriftConfiguration&) = default;
  friend auto operator<=>(const DriftConfiguration&, const DriftConfiguration&) = default;
};

/// Largest d such that every box of `region` shifted by (d,d) stays inside
/// `arena`; -1 if the region does not fit even unshifted.
int max_diagonal_shift(const BoxSet& region, const Partition& arena);

/// True if `drift` is a valid configuration: translated continents inside
/// the arena, pairwise disjoint, disjoint from the reference continent, and
/// weakly-southwest relations between special boxes preserved.
bool is_valid_drift(const PairGeometry& geometry, std::span<const int> drift);

/// All drift configurations, lexicographic in the drift vector.
std::vector<DriftConfiguration> enumerate_drift(const PairGeometry& geometry);
std::vector<DriftConfiguration> enumerate_drift(const Permutation& v, const Permutation& w);

/// Sum of q^{weight} over drift configurations; 1 for an empty shape.
IntPolynomial q_polynomial(const PairGeometry& geometry);
IntPolynomial q_polynomial(const Permutation& v, const Permutation& w);

/// Every box of lambda drifts as its own country under the same rules.
IntPolynomial country_drift_series(const PairGeometry& geometry);
IntPolynomial country_drift_series(const Permutation& v, const Permutation& w);

/// Rooted tree on continents. nodes[0] is the root; node k+1 belongs to
/// continent k. Leaves carry the bound b_h - h of their corner (h, lambda_h).
struct LascouxTree {
  struct Node {
    int parent = -1;
    Box special{};
    std::vector<int> children;
    int leaf_bound = -1;  // set on leaves only
  };
  std::vector<Node> nodes;

  bool is_leaf(int node) const { return node > 0 && nodes[static_cast<std::size_t>(node)].children.empty(); }
  std::string describe() const;
};

/// Tree from continent adjacency, with leaf bounds.
LascouxTree lascoux_tree(const PairGeometry& geometry);
LascouxTree lascoux_tree(const Permutation& v, const Permutation& w);

/// Nesting forest of the parenthesis word plus a root; no leaf bounds.
LascouxTree parenthesis_tree(const Partition& lambda);

/// Same parent relation when nodes are identified by their special boxes.
bool same_shape(const LascouxTree& a, const LascouxTree& b);

/// Edge labels indexed by node (entry 0 unused, always 0).
using EdgeLabeling = std::vector<int>;

/// Nonnegative labelings weakly increasing from root to leaf, each leaf edge
/// at most its bound.
std::vector<EdgeLabeling> enumerate_labelings(const LascouxTree& tree);
int labeling_weight(const EdgeLabeling& labels);

/// [a,b,c,d] = (1..a, a+c+1..a+c+b, a+1..a+c, a+c+b+1..n).
struct Bigrassmannian {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  int n() const noexcept { return a + b + c + d; }
  Permutation expand() const;
  friend bool operator==(const Bigrassmannian&, const Bigrassmannian&) = default;
};

/// g <= vtilde in Bruhat order, via the rank of v = w0 * vtilde^{-1} at the
/// box (a+b, a+c).
bool bigrassmannian_leq(const Bigrassmannian& g, const Permutation& vtilde);

/// max{r >= 0 : [a-r, b+r, c+r, d-r] <= vtilde}. Throws Error{NotBelow} if
/// g itself is not below vtilde.
int bigrassmannian_distance(const Bigrassmannian& g, const Permutation& vtilde);

/// Per-leaf data relating a corner of lambda(w) to the essential box of w on
/// its diagonal and the bigrassmannian built from the associated crossing.
struct LeafCrossing {
  Box corner;
  Box essential;
  Bigrassmannian g;
  int rank_w = 0;
  int rank_v = 0;
};

std::vector<LeafCrossing> leaf_crossings(const PairGeometry& geometry);

}  // namespace driftkl
