#pragma once

#include <compare>
#include <string>
#include <vector>

#include "driftkl/permutation.hpp"

namespace driftkl {

/// A cell of the n x n grid. Rows are counted from the bottom, columns from
/// the left, both starting at 1.
struct Box {
  int row = 1;
  int col = 1;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// a is weakly southwest of b.
inline bool weakly_southwest(const Box& a, const Box& b) noexcept {
  return a.row <= b.row && a.col <= b.col;
}

std::string to_string(const Box& b);

/// Sorted, duplicate-free list of boxes.
using BoxSet = std::vector<Box>;

/// Young diagram in French convention: rows()[0] is the bottom (longest) row.
class Partition {
 public:
  Partition() = default;
  /// Throws Error{InternalInvariant} unless rows is weakly decreasing and
  /// positive.
  explicit Partition(std::vector<int> rows);

  /// Length of row m (1-based); 0 past the last row.
  int operator[](int m) const noexcept {
    return m >= 1 && m <= num_rows() ? rows_[static_cast<std::size_t>(m - 1)] : 0;
  }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  int num_cols() const noexcept { return rows_.empty() ? 0 : rows_.front(); }
  int size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<int>& rows() const noexcept { return rows_; }

  bool contains(const Box& b) const noexcept {
    return b.row >= 1 && b.col >= 1 && b.col <= (*this)[b.row];
  }
  /// Height of column j.
  int column_height(int j) const noexcept;
  /// Boxes in row-reading order: bottom row first, left to right.
  BoxSet boxes() const;
  /// Northeast corners (h, lambda_h) with lambda_{h+1} < lambda_h.
  BoxSet corners() const;
  bool contained_in(const Partition& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> rows_;
};

/// Smallest partition containing every box of `boxes`.
Partition partition_hull(const BoxSet& boxes);

/// Row bounds b_1..b_l for the flagged tableaux over lambda(w).
class FlagVector {
 public:
  FlagVector() = default;
  explicit FlagVector(std::vector<int> bounds) : bounds_(std::move(bounds)) {}

  int operator[](int i) const { return bounds_[static_cast<std::size_t>(i - 1)]; }
  int size() const noexcept { return static_cast<int>(bounds_.size()); }
  const std::vector<int>& bounds() const noexcept { return bounds_; }

  /// Componentwise comparison.
  bool leq(const FlagVector& other) const noexcept;

  friend bool operator==(const FlagVector&, const FlagVector&) = default;

 private:
  std::vector<int> bounds_;
};

/// D(w) = {(i,j) : i < n-w(j)+1, j < w^{-1}(n-i+1)}.
BoxSet flipped_diagram(const Permutation& w);

/// The dots of G(u): one per column j, at row n-u(j)+1.
BoxSet graph_dots(const Permutation& u);

/// Boxes of D(w) whose north and east neighbours lie outside D(w).
BoxSet essential_set(const Permutation& w);

/// Row counts of D(w), sorted decreasingly.
Partition shape(const Permutation& w);

/// Number of dots of G(u) weakly southwest of b. Throws Error{BoxOutOfGrid}.
int rank_sw(const Permutation& u, const Box& b);

/// Essential boxes of w moved diagonally southwest by the rank of v at each.
/// Requires v <= w and w covexillary.
BoxSet theta_essential(const Permutation& v, const Permutation& w);

/// Smallest partition containing theta_essential(v, w) and (1,1).
Partition bounding_partition(const Permutation& v, const Permutation& w);

/// b_i = max{m : B_m >= lambda_i + m - i} for the bounding partition B and
/// lambda = shape(w). Throws Error{EmptyShape} when lambda is empty.
FlagVector flag_vector(const Permutation& v, const Permutation& w);

/// Same computation from already-built data.
FlagVector flag_vector(const Partition& lambda, const Partition& arena);

/// Throws NotComparable / NotCovexillary / RankMismatch for an invalid pair.
void require_covexillary_pair(const Permutation& v, const Permutation& w);

}  // namespace driftkl
