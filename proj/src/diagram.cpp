#include "driftkl/diagram.hpp"

#include <algorithm>
#include <map>

#include "driftkl/error.hpp"

namespace driftkl {

std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1])) {
      throw Error(ErrorKind::InternalInvariant, "not a partition: " + to_string());
    }
  }
}

int Partition::size() const noexcept {
  int total = 0;
  for (int r : rows_) total += r;
  return total;
}

int Partition::column_height(int j) const noexcept {
  int h = 0;
  while (h < num_rows() && rows_[static_cast<std::size_t>(h)] >= j) ++h;
  return j >= 1 ? h : 0;
}

BoxSet Partition::boxes() const {
  BoxSet out;
  for (int i = 1; i <= num_rows(); ++i) {
    for (int j = 1; j <= (*this)[i]; ++j) out.push_back({i, j});
  }
  return out;
}

BoxSet Partition::corners() const {
  BoxSet out;
  for (int h = 1; h <= num_rows(); ++h) {
    if ((*this)[h + 1] < (*this)[h]) out.push_back({h, (*this)[h]});
  }
  return out;
}

bool Partition::contained_in(const Partition& other) const noexcept {
  for (int m = 1; m <= num_rows(); ++m) {
    if ((*this)[m] > other[m]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out + ")";
}

Partition partition_hull(const BoxSet& boxes) {
  int top = 0;
  for (const Box& b : boxes) top = std::max(top, b.row);
  std::vector<int> rows(static_cast<std::size_t>(top), 0);
  for (const Box& b : boxes) {
    for (int m = 1; m <= b.row; ++m) {
      auto& r = rows[static_cast<std::size_t>(m - 1)];
      r = std::max(r, b.col);
    }
  }
  return Partition(std::move(rows));
}

bool FlagVector::leq(const FlagVector& other) const noexcept {
  if (size() != other.size()) return false;
  for (int i = 1; i <= size(); ++i) {
    if ((*this)[i] > other[i]) return false;
  }
  return true;
}

BoxSet flipped_diagram(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = inverse(w);
  BoxSet out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i < n - w(j) + 1 && j < winv(n - i + 1)) out.push_back({i, j});
    }
  }
  return out;
}

BoxSet graph_dots(const Permutation& u) {
  const int n = u.size();
  BoxSet out;
  for (int j = 1; j <= n; ++j) out.push_back({n - u(j) + 1, j});
  std::sort(out.begin(), out.end());
  return out;
}

BoxSet essential_set(const Permutation& w) {
  const BoxSet diagram = flipped_diagram(w);
  auto in_diagram = [&](const Box& b) {
    return std::binary_search(diagram.begin(), diagram.end(), b);
  };
  BoxSet out;
  for (const Box& b : diagram) {
    if (!in_diagram({b.row + 1, b.col}) && !in_diagram({b.row, b.col + 1})) out.push_back(b);
  }
  return out;
}

Partition shape(const Permutation& w) {
  std::map<int, int> per_row;
  for (const Box& b : flipped_diagram(w)) ++per_row[b.row];
  std::vector<int> rows;
  for (const auto& [row, count] : per_row) rows.push_back(count);
  std::sort(rows.rbegin(), rows.rend());
  return Partition(std::move(rows));
}

int rank_sw(const Permutation& u, const Box& b) {
  const int n = u.size();
  if (b.row < 1 || b.col < 1 || b.row > n || b.col > n) {
    throw Error(ErrorKind::BoxOutOfGrid,
                to_string(b) + " outside the " + std::to_string(n) + "x" + std::to_string(n) + " grid");
  }
  int count = 0;
  for (int j = 1; j <= b.col; ++j) {
    if (n - u(j) + 1 <= b.row) ++count;
  }
  return count;
}

void require_covexillary_pair(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorKind::RankMismatch,
                "S_" + std::to_string(v.size()) + " vs S_" + std::to_string(w.size()));
  }
  if (!is_covexillary(w)) {
    throw Error(ErrorKind::NotCovexillary, w.to_string() + " contains 3412");
  }
  if (!bruhat_leq(v, w)) {
    throw Error(ErrorKind::NotComparable, v.to_string() + " is not below " + w.to_string());
  }
}

BoxSet theta_essential(const Permutation& v, const Permutation& w) {
  require_covexillary_pair(v, w);
  BoxSet out;
  for (const Box& e : essential_set(w)) {
    const int r = rank_sw(v, e);
    const Box moved{e.row - r, e.col - r};
    if (moved.row < 1 || moved.col < 1) {
      throw Error(ErrorKind::InternalGeometry,
                  "essential box " + to_string(e) + " shifted off the grid");
    }
    out.push_back(moved);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Partition bounding_partition(const Permutation& v, const Permutation& w) {
  BoxSet boxes = theta_essential(v, w);
  boxes.push_back({1, 1});
  return partition_hull(boxes);
}

FlagVector flag_vector(const Partition& lambda, const Partition& arena) {
  if (lambda.empty()) throw Error(ErrorKind::EmptyShape, "shape is empty (smooth point)");
  std::vector<int> bounds;
  const int search_top = arena.num_rows() + lambda.size() + 1;
  for (int i = 1; i <= lambda.num_rows(); ++i) {
    int best = 0;
    for (int m = 1; m <= search_top; ++m) {
      if (arena[m] >= lambda[i] + m - i) best = m;
    }
    if (best < i) {
      throw Error(ErrorKind::InternalInvariant,
                  "flag b_" + std::to_string(i) + " = " + std::to_string(best) + " < " +
                      std::to_string(i));
    }
    if (!bounds.empty() && best < bounds.back()) {
      throw Error(ErrorKind::InternalInvariant, "flag vector not weakly increasing");
    }
    bounds.push_back(best);
  }
  return FlagVector(std::move(bounds));
}

FlagVector flag_vector(const Permutation& v, const Permutation& w) {
  const Partition lambda = shape(w);
  if (lambda.empty()) throw Error(ErrorKind::EmptyShape, "shape is empty (smooth point)");
  return flag_vector(lambda, bounding_partition(v, w));
}

}  // namespace driftkl
