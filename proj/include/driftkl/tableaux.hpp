#pragma once

#include <functional>
#include <string>
#include <vector>

#include "driftkl/diagram.hpp"
#include "driftkl/drift.hpp"
#include "driftkl/polynomial.hpp"

namespace driftkl {

/// Integer filling of a partition. rows[i-1][j-1] holds T(i,j); row 1 is the
/// bottom row.
class FlaggedTableau {
 public:
  FlaggedTableau() = default;
  /// Throws Error{InternalInvariant} if the row lengths differ from `shape`.
  FlaggedTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  int& at(int i, int j) { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

  /// Rows weakly increase, columns strictly increase upward, entries >= 1.
  bool is_semistandard() const noexcept;
  /// Semistandard and every entry of row i is at most flags[i].
  bool is_flagged(const FlagVector& flags) const noexcept;

  /// "[1,1],[2]" listing rows bottom to top.
  std::string to_string() const;

  friend bool operator==(const FlaggedTableau&, const FlaggedTableau&) = default;
  friend auto operator<=>(const FlaggedTableau&, const FlaggedTableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Filling by nonempty sets of positive integers, each stored sorted.
class SetValuedTableau {
 public:
  using Entry = std::vector<int>;

  SetValuedTableau() = default;
  SetValuedTableau(Partition shape, std::vector<std::vector<Entry>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<Entry>>& rows() const noexcept { return rows_; }
  const Entry& operator()(int i, int j) const {
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  /// Total number of entries.
  int size() const noexcept;
  /// ex(U) = size() - |shape|.
  int excess() const noexcept;
  /// max U(i,j) <= min U(i,j+1), max U(i,j) < min U(i+1,j), max of row i <= flags[i].
  bool is_flagged(const FlagVector& flags) const noexcept;

  std::string to_string() const;

  friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<Entry>> rows_;
};

/// Lexicographic in row-reading order. Throws Error{FlagMismatch} unless
/// flags has one bound per row.
std::vector<FlaggedTableau> enumerate_flagged_ssyt(const Partition& lambda, const FlagVector& flags);
std::size_t count_flagged_ssyt(const Partition& lambda, const FlagVector& flags);

/// Box (i,j) becomes the interval [max(T(i,j-1), 1+T(i-1,j)), T(i,j)] with
/// T(i,0) = 1 and T(0,j) = 0.
SetValuedTableau saturate(const FlaggedTableau& t);
/// Entrywise maximum.
FlaggedTableau sup(const SetValuedTableau& u);
/// No entry can be inserted below the minimum of any box, and every box is
/// an interval.
bool is_lower_saturated(const SetValuedTableau& u);
/// |sat(T)| - |lambda|.
int depth(const FlaggedTableau& t);

/// Calls `visit` on every flagged set-valued tableau. Throws
/// Error{FlagMismatch} as enumerate_flagged_ssyt.
void for_each_setvalued(const Partition& lambda, const FlagVector& flags,
                        const std::function<void(const SetValuedTableau&)>& visit);
std::vector<SetValuedTableau> enumerate_setvalued(const Partition& lambda, const FlagVector& flags);

/// Sum of q^{depth(T)} over flagged SSYT; 1 for an empty shape.
IntPolynomial h_polynomial(const PairGeometry& geometry);
IntPolynomial h_polynomial(const Permutation& v, const Permutation& w);

/// Sum of (q-1)^{ex(U)} over every flagged set-valued tableau.
IntPolynomial h_polynomial_setvalued_oracle(const PairGeometry& geometry);
IntPolynomial h_polynomial_setvalued_oracle(const Permutation& v, const Permutation& w);

/// Drift configuration to tableau: the top box of each special column gets
/// its height plus the drift of the continent of that special box; other
/// boxes follow the prescription
///   T(i,j) = min(T(i+1,j) - 1, T(i-1,j+1) + 1)
/// filled down columns from right to left. Out-of-shape cells read as
/// infinity, except row 0 within the first m columns, which reads as 0.
/// Throws Error{InternalInvariant} if the result is not flagged.
FlaggedTableau psi(const DriftConfiguration& d, const PairGeometry& geometry);

/// Prescription value at (i,j) computed from the current entries of t.
int prescription(const FlaggedTableau& t, int i, int j);

/// (a) the prescription holds away from the tops of special columns and
/// (b) T(top,j) - top weakly increases along weakly-SW pairs of special boxes.
bool is_in_psi_image(const FlaggedTableau& t, const PairGeometry& geometry);

/// Repeatedly resets the non-corner box with smallest (column, row) that
/// breaks the prescription. Throws Error{NonTermination} after 2^{|lambda|}
/// steps.
FlaggedTableau augment_to_image(const FlaggedTableau& t, const PairGeometry& geometry);

/// Sequence of tableaux visited by augment_to_image, starting with t.
std::vector<FlaggedTableau> augmentation_path(const FlaggedTableau& t, const PairGeometry& geometry);

}  // namespace driftkl
