#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "driftkl/permutation.hpp"
#include "driftkl/polynomial.hpp"

namespace driftkl {

/// Which left descent s (sw < w) drives the recursion.
enum class DescentChoice { Leftmost, Rightmost };

enum class Execution { Serial, Parallel };

/// Kazhdan-Lusztig polynomials of S_n through the standard recursion
///   P_{v,w} = q^{1-c} P_{sv,sw} + q^c P_{v,sw}
///             - sum_{z < sw, sz < z} mu(z,sw) q^{(l(w)-l(z))/2} P_{v,z},
/// c = [sv < v], with s a left descent of w.
///
/// Columns (all P_{v,w} for one w) are built lazily under a lock, or eagerly
/// by precompute(), which fills one length level at a time. A finished
/// column is immutable, so reads after precompute() never contend.
class KLTable {
 public:
  static constexpr int kMaxRank = 8;

  /// Throws Error{RankTooLarge} for n > kMaxRank.
  explicit KLTable(int n, DescentChoice descent = DescentChoice::Leftmost);
  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;
  ~KLTable();

  int rank() const noexcept { return n_; }
  DescentChoice descent() const noexcept { return descent_; }

  /// Zero when v is not below w. Throws Error{RankMismatch}.
  IntPolynomial polynomial(const Permutation& v, const Permutation& w);
  /// Coefficient of q^{(l(w)-l(v)-1)/2}; 0 when that exponent is not an
  /// integer. Throws Error{NotStrictlyBelow} unless v < w.
  std::int64_t mu(const Permutation& v, const Permutation& w);
  /// Bruhat order read off the table: v <= w iff P_{v,w} != 0.
  bool leq(const Permutation& v, const Permutation& w);

  /// Fills every column.
  void precompute(Execution mode);
  std::size_t computed_columns() const noexcept;

 private:
  struct Column;

  const Column& column(std::size_t w);
  const Column& column_locked(std::size_t w);
  void build_column(std::size_t w);
  std::size_t index_of(const Permutation& p) const;
  int pick_descent(std::size_t w) const;

  int n_;
  DescentChoice descent_;
  std::vector<Permutation> perms_;
  std::vector<int> length_;
  // left_[i][x] = index of s_i x, i = 1..n-1.
  std::vector<std::vector<std::uint32_t>> left_;
  std::vector<std::unique_ptr<Column>> columns_;
  std::unique_ptr<std::atomic<bool>[]> ready_;
  std::recursive_mutex mutex_;
};

/// Uses a process-wide table per rank. Throws Error{RankMismatch} or
/// Error{RankTooLarge}.
IntPolynomial kl_polynomial(const Permutation& v, const Permutation& w);
std::int64_t mu_coefficient(const Permutation& v, const Permutation& w);

/// The process-wide table behind kl_polynomial.
KLTable& shared_kl_table(int n);

}  // namespace driftkl
