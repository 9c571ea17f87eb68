#include "driftkl/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "driftkl/error.hpp"

namespace driftkl {
namespace {

constexpr int kInfinity = 1 << 20;

bool is_infinite(int x) { return x >= kInfinity / 2; }

void require_flags(const Partition& lambda, const FlagVector& flags) {
  if (flags.size() != lambda.num_rows()) {
    throw Error(ErrorKind::FlagMismatch, std::to_string(flags.size()) + " flags for " +
                                             std::to_string(lambda.num_rows()) + " rows");
  }
}

std::vector<std::vector<int>> zero_rows(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int len : lambda.rows()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  return rows;
}

/// Column index of the special box in column j, or -1.
std::vector<int> special_by_column(const PairGeometry& geometry) {
  std::vector<int> out(static_cast<std::size_t>(geometry.shape.num_cols()) + 1, -1);
  const auto& specials = geometry.pangaea.specials;
  for (std::size_t k = 0; k < specials.size(); ++k) {
    out[static_cast<std::size_t>(specials[k].box.col)] = static_cast<int>(k);
  }
  return out;
}

bool is_corner(const Partition& lambda, int i, int j) {
  return lambda[i] == j && lambda[i + 1] < j;
}

template <typename Visit>
void fill_ssyt(const Partition& lambda, const FlagVector& flags, std::vector<std::vector<int>>& rows,
               int i, int j, Visit& visit) {
  if (i > lambda.num_rows()) {
    visit(rows);
    return;
  }
  if (j > lambda[i]) {
    fill_ssyt(lambda, flags, rows, i + 1, 1, visit);
    return;
  }
  int lo = i == 1 ? 1 : rows[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] + 1;
  if (j > 1) lo = std::max(lo, rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 2)]);
  for (int x = lo; x <= flags[i]; ++x) {
    rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = x;
    fill_ssyt(lambda, flags, rows, i, j + 1, visit);
  }
}

/// Set-valued recursion. Only the maxima constrain later boxes.
template <typename Visit>
void fill_setvalued(const Partition& lambda, const FlagVector& flags,
                    std::vector<std::vector<SetValuedTableau::Entry>>& rows, int i, int j, Visit& visit) {
  if (i > lambda.num_rows()) {
    visit(rows);
    return;
  }
  if (j > lambda[i]) {
    fill_setvalued(lambda, flags, rows, i + 1, 1, visit);
    return;
  }
  int lo = i == 1 ? 1 : rows[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)].back() + 1;
  if (j > 1) lo = std::max(lo, rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 2)].back());
  const int width = flags[i] - lo + 1;
  if (width <= 0) return;
  auto& entry = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  for (unsigned mask = 1; mask < (1u << width); ++mask) {
    entry.clear();
    for (int bit = 0; bit < width; ++bit) {
      if (mask & (1u << bit)) entry.push_back(lo + bit);
    }
    fill_setvalued(lambda, flags, rows, i, j + 1, visit);
  }
  entry.clear();
}

std::vector<std::vector<SetValuedTableau::Entry>> empty_set_rows(const Partition& lambda) {
  std::vector<std::vector<SetValuedTableau::Entry>> rows;
  for (int len : lambda.rows()) rows.emplace_back(static_cast<std::size_t>(len));
  return rows;
}

}  // namespace

FlaggedTableau::FlaggedTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  bool ok = static_cast<int>(rows_.size()) == shape_.num_rows();
  for (std::size_t r = 0; ok && r < rows_.size(); ++r) ok = static_cast<int>(rows_[r].size()) == shape_.rows()[r];
  if (!ok) throw Error(ErrorKind::InternalInvariant, "tableau rows do not match " + shape_.to_string());
}

bool FlaggedTableau::is_semistandard() const noexcept {
  for (int i = 1; i <= shape_.num_rows(); ++i) {
    for (int j = 1; j <= shape_[i]; ++j) {
      const int x = (*this)(i, j);
      if (x < 1) return false;
      if (j > 1 && (*this)(i, j - 1) > x) return false;
      if (i > 1 && (*this)(i - 1, j) >= x) return false;
    }
  }
  return true;
}

bool FlaggedTableau::is_flagged(const FlagVector& flags) const noexcept {
  if (flags.size() != shape_.num_rows() || !is_semistandard()) return false;
  for (int i = 1; i <= shape_.num_rows(); ++i) {
    if ((*this)(i, shape_[i]) > flags[i]) return false;
  }
  return true;
}

std::string FlaggedTableau::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) out << (c ? "," : "") << rows_[r][c];
    out << ']';
  }
  return out.str();
}

SetValuedTableau::SetValuedTableau(Partition shape, std::vector<std::vector<Entry>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  bool ok = static_cast<int>(rows_.size()) == shape_.num_rows();
  for (std::size_t r = 0; ok && r < rows_.size(); ++r) {
    ok = static_cast<int>(rows_[r].size()) == shape_.rows()[r];
    for (auto& e : rows_[r]) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      ok = ok && !e.empty();
    }
  }
  if (!ok) throw Error(ErrorKind::InternalInvariant, "set-valued rows do not match " + shape_.to_string());
}

int SetValuedTableau::size() const noexcept {
  int total = 0;
  for (const auto& row : rows_) {
    for (const auto& e : row) total += static_cast<int>(e.size());
  }
  return total;
}

int SetValuedTableau::excess() const noexcept { return size() - shape_.size(); }

bool SetValuedTableau::is_flagged(const FlagVector& flags) const noexcept {
  if (flags.size() != shape_.num_rows()) return false;
  for (int i = 1; i <= shape_.num_rows(); ++i) {
    for (int j = 1; j <= shape_[i]; ++j) {
      const Entry& e = (*this)(i, j);
      if (e.front() < 1 || e.back() > flags[i]) return false;
      if (j > 1 && (*this)(i, j - 1).back() > e.front()) return false;
      if (i > 1 && (*this)(i - 1, j).back() >= e.front()) return false;
    }
  }
  return true;
}

std::string SetValuedTableau::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ',';
      out << '{';
      for (std::size_t k = 0; k < rows_[r][c].size(); ++k) out << (k ? "," : "") << rows_[r][c][k];
      out << '}';
    }
    out << ']';
  }
  return out.str();
}

std::vector<FlaggedTableau> enumerate_flagged_ssyt(const Partition& lambda, const FlagVector& flags) {
  require_flags(lambda, flags);
  std::vector<FlaggedTableau> out;
  auto rows = zero_rows(lambda);
  auto visit = [&](const std::vector<std::vector<int>>& r) { out.emplace_back(lambda, r); };
  fill_ssyt(lambda, flags, rows, 1, 1, visit);
  return out;
}

std::size_t count_flagged_ssyt(const Partition& lambda, const FlagVector& flags) {
  require_flags(lambda, flags);
  std::size_t count = 0;
  auto rows = zero_rows(lambda);
  auto visit = [&](const std::vector<std::vector<int>>&) { ++count; };
  fill_ssyt(lambda, flags, rows, 1, 1, visit);
  return count;
}

SetValuedTableau saturate(const FlaggedTableau& t) {
  const Partition& lambda = t.shape();
  auto rows = empty_set_rows(lambda);
  for (int i = 1; i <= lambda.num_rows(); ++i) {
    for (int j = 1; j <= lambda[i]; ++j) {
      const int left = j == 1 ? 1 : t(i, j - 1);
      const int below = i == 1 ? 0 : t(i - 1, j);
      const int lo = std::max(left, below + 1);
      auto& e = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      for (int x = lo; x <= t(i, j); ++x) e.push_back(x);
    }
  }
  return SetValuedTableau(lambda, std::move(rows));
}

FlaggedTableau sup(const SetValuedTableau& u) {
  auto rows = zero_rows(u.shape());
  for (int i = 1; i <= u.shape().num_rows(); ++i) {
    for (int j = 1; j <= u.shape()[i]; ++j) {
      rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = u(i, j).back();
    }
  }
  return FlaggedTableau(u.shape(), std::move(rows));
}

bool is_lower_saturated(const SetValuedTableau& u) {
  const Partition& lambda = u.shape();
  for (int i = 1; i <= lambda.num_rows(); ++i) {
    for (int j = 1; j <= lambda[i]; ++j) {
      const auto& e = u(i, j);
      if (e.back() - e.front() + 1 != static_cast<int>(e.size())) return false;
      // Inserting x = min-1 keeps the tableau set-valued iff it clears both
      // neighbours that bound the minimum.
      const int x = e.front() - 1;
      const int left = j == 1 ? 1 : u(i, j - 1).back();
      const int below = i == 1 ? 0 : u(i - 1, j).back();
      if (x >= 1 && x >= left && x > below) return false;
    }
  }
  return true;
}

int depth(const FlaggedTableau& t) { return saturate(t).excess(); }

void for_each_setvalued(const Partition& lambda, const FlagVector& flags,
                        const std::function<void(const SetValuedTableau&)>& visit) {
  require_flags(lambda, flags);
  auto rows = empty_set_rows(lambda);
  auto wrap = [&](const std::vector<std::vector<SetValuedTableau::Entry>>& r) {
    visit(SetValuedTableau(lambda, r));
  };
  fill_setvalued(lambda, flags, rows, 1, 1, wrap);
}

std::vector<SetValuedTableau> enumerate_setvalued(const Partition& lambda, const FlagVector& flags) {
  std::vector<SetValuedTableau> out;
  for_each_setvalued(lambda, flags, [&](const SetValuedTableau& u) { out.push_back(u); });
  return out;
}

IntPolynomial h_polynomial(const PairGeometry& geometry) {
  if (geometry.shape.empty()) return IntPolynomial::constant(1);
  require_flags(geometry.shape, geometry.flags);
  std::vector<std::int64_t> counts;
  auto rows = zero_rows(geometry.shape);
  auto visit = [&](const std::vector<std::vector<int>>& r) {
    const int d = depth(FlaggedTableau(geometry.shape, r));
    if (static_cast<int>(counts.size()) <= d) counts.resize(static_cast<std::size_t>(d) + 1, 0);
    ++counts[static_cast<std::size_t>(d)];
  };
  fill_ssyt(geometry.shape, geometry.flags, rows, 1, 1, visit);
  return IntPolynomial(std::move(counts));
}

IntPolynomial h_polynomial(const Permutation& v, const Permutation& w) {
  return h_polynomial(make_pair_geometry(v, w));
}

IntPolynomial h_polynomial_setvalued_oracle(const PairGeometry& geometry) {
  if (geometry.shape.empty()) return IntPolynomial::constant(1);
  require_flags(geometry.shape, geometry.flags);
  std::vector<std::int64_t> by_excess;
  const int boxes = geometry.shape.size();
  auto rows = empty_set_rows(geometry.shape);
  auto visit = [&](const std::vector<std::vector<SetValuedTableau::Entry>>& r) {
    int total = 0;
    for (const auto& row : r) {
      for (const auto& e : row) total += static_cast<int>(e.size());
    }
    const int ex = total - boxes;
    if (static_cast<int>(by_excess.size()) <= ex) by_excess.resize(static_cast<std::size_t>(ex) + 1, 0);
    ++by_excess[static_cast<std::size_t>(ex)];
  };
  fill_setvalued(geometry.shape, geometry.flags, rows, 1, 1, visit);
  IntPolynomial result;
  const IntPolynomial q_minus_one{-1, 1};
  IntPolynomial power = IntPolynomial::constant(1);
  for (std::size_t ex = 0; ex < by_excess.size(); ++ex) {
    result += power * IntPolynomial::constant(by_excess[ex]);
    power *= q_minus_one;
  }
  return result;
}

IntPolynomial h_polynomial_setvalued_oracle(const Permutation& v, const Permutation& w) {
  return h_polynomial_setvalued_oracle(make_pair_geometry(v, w));
}

int prescription(const FlaggedTableau& t, int i, int j) {
  const Partition& lambda = t.shape();
  const int m = lambda.num_cols();
  const int above = lambda.contains({i + 1, j}) ? t(i + 1, j) : kInfinity;
  int right_below = kInfinity;
  if (j + 1 <= m) {
    if (i - 1 == 0) {
      right_below = 0;
    } else if (lambda.contains({i - 1, j + 1})) {
      right_below = t(i - 1, j + 1);
    }
  }
  const int a = is_infinite(above) ? kInfinity : above - 1;
  const int b = is_infinite(right_below) ? kInfinity : right_below + 1;
  return std::min(a, b);
}

FlaggedTableau psi(const DriftConfiguration& d, const PairGeometry& geometry) {
  const Partition& lambda = geometry.shape;
  const auto& specials = geometry.pangaea.specials;
  if (d.drift.size() != specials.size()) {
    throw Error(ErrorKind::InternalInvariant, "drift vector does not match the continents");
  }
  FlaggedTableau t(lambda, zero_rows(lambda));
  const std::vector<int> special_col = special_by_column(geometry);
  for (int j = lambda.num_cols(); j >= 1; --j) {
    const int top = lambda.column_height(j);
    const int k = special_col[static_cast<std::size_t>(j)];
    for (int i = top; i >= 1; --i) {
      if (i == top && k >= 0) {
        t.at(i, j) = top + d.drift[static_cast<std::size_t>(k)];
        continue;
      }
      const int x = prescription(t, i, j);
      if (is_infinite(x)) {
        throw Error(ErrorKind::InternalInvariant, "unbounded prescription at " + to_string(Box{i, j}));
      }
      t.at(i, j) = x;
    }
  }
  if (!t.is_flagged(geometry.flags)) {
    throw Error(ErrorKind::InternalInvariant, "psi produced non-flagged " + t.to_string());
  }
  return t;
}

bool is_in_psi_image(const FlaggedTableau& t, const PairGeometry& geometry) {
  const Partition& lambda = geometry.shape;
  const std::vector<int> special_col = special_by_column(geometry);
  for (int j = 1; j <= lambda.num_cols(); ++j) {
    const int top = lambda.column_height(j);
    for (int i = 1; i <= top; ++i) {
      if (i == top && special_col[static_cast<std::size_t>(j)] >= 0) continue;
      if (t(i, j) != prescription(t, i, j)) return false;
    }
  }
  const auto& specials = geometry.pangaea.specials;
  auto lift = [&](const Box& s) {
    const int top = lambda.column_height(s.col);
    return t(top, s.col) - top;
  };
  for (const SpecialBox& a : specials) {
    for (const SpecialBox& b : specials) {
      if (a.box != b.box && weakly_southwest(a.box, b.box) && lift(a.box) > lift(b.box)) return false;
    }
  }
  return true;
}

std::vector<FlaggedTableau> augmentation_path(const FlaggedTableau& t, const PairGeometry& geometry) {
  const Partition& lambda = geometry.shape;
  const int boxes = lambda.size();
  const std::uint64_t cap = boxes >= 63 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << boxes);
  std::vector<FlaggedTableau> path{t};
  FlaggedTableau current = t;
  for (std::uint64_t step = 0;; ++step) {
    bool changed = false;
    for (int j = 1; j <= lambda.num_cols() && !changed; ++j) {
      for (int i = 1; i <= lambda.column_height(j) && !changed; ++i) {
        if (is_corner(lambda, i, j)) continue;
        const int x = prescription(current, i, j);
        if (current(i, j) != x) {
          current.at(i, j) = x;
          changed = true;
        }
      }
    }
    if (!changed) return path;
    if (step >= cap) {
      throw Error(ErrorKind::NonTermination, "augmentation of " + t.to_string() + " did not stop");
    }
    path.push_back(current);
  }
}

FlaggedTableau augment_to_image(const FlaggedTableau& t, const PairGeometry& geometry) {
  return augmentation_path(t, geometry).back();
}

}  // namespace driftkl
