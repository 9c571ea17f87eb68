#include "driftkl/drift.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "driftkl/error.hpp"

namespace driftkl {
namespace {

int arm_length(const Partition& lambda, const Box& b) { return lambda[b.row] - b.col; }
int leg_length(const Partition& lambda, const Box& b) { return lambda.column_height(b.col) - b.row; }

BoxSet hook(const Partition& lambda, const Box& b) {
  BoxSet out{b};
  for (int j = b.col + 1; j <= lambda[b.row]; ++j) out.push_back({b.row, j});
  for (int i = b.row + 1; i <= lambda.column_height(b.col); ++i) out.push_back({i, b.col});
  std::sort(out.begin(), out.end());
  return out;
}

bool strictly_northeast_of(const Box& a, const Box& b) {  // a != b, a weakly NE of b
  return a != b && weakly_southwest(b, a);
}

struct MatchedPair {
  Box box;
  int open = 0;
  int close = 0;
  int level = 0;
};

std::vector<MatchedPair> parenthesis_pairs(const Partition& lambda) {
  struct Open {
    int col;
    int index;
    int max_child_level;
  };
  std::vector<Open> stack;
  std::vector<MatchedPair> pairs;
  int row = lambda.num_rows();
  int col = 0;
  int index = 0;
  while (row >= 1) {
    if (col < lambda[row]) {
      ++col;
      stack.push_back({col, index, -1});
    } else {
      if (!stack.empty()) {
        const Open top = stack.back();
        stack.pop_back();
        const int level = top.max_child_level + 1;
        pairs.push_back({{row, top.col}, top.index, index, level});
        if (!stack.empty()) stack.back().max_child_level = std::max(stack.back().max_child_level, level);
      }
      --row;
    }
    ++index;
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const MatchedPair& a, const MatchedPair& b) { return a.box < b.box; });
  return pairs;
}

/// Translation search shared by continent drifts and country drifts.
struct DriftProblem {
  std::vector<BoxSet> pieces;
  std::vector<Box> anchors;
  BoxSet fixed;
  Partition arena;
};

class DriftSearch {
 public:
  explicit DriftSearch(const DriftProblem& problem) : problem_(problem) {
    const std::size_t k = problem.pieces.size();
    caps_.resize(k);
    blocked_.resize(k);
    overlap_.assign(k, std::vector<std::vector<int>>(k));
    max_lead_.assign(k, std::vector<int>(k, std::numeric_limits<int>::max()));
    for (std::size_t a = 0; a < k; ++a) {
      caps_[a] = max_diagonal_shift(problem.pieces[a], problem.arena);
      for (const Box& x : problem.pieces[a]) {
        for (const Box& r : problem.fixed) {
          if (r.row - x.row == r.col - x.col && r.row >= x.row) blocked_[a].push_back(r.row - x.row);
        }
      }
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b) continue;
        // Overlap iff d_b - d_a equals some diagonal offset x - y.
        for (const Box& x : problem.pieces[a]) {
          for (const Box& y : problem.pieces[b]) {
            if (x.row - y.row == x.col - y.col) overlap_[a][b].push_back(x.row - y.row);
          }
        }
        const Box& sa = problem.anchors[a];
        const Box& sb = problem.anchors[b];
        if (weakly_southwest(sa, sb)) {
          max_lead_[a][b] = std::min(sb.row - sa.row, sb.col - sa.col);  // d_a - d_b <= this
        }
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (std::any_of(caps_.begin(), caps_.end(), [](int c) { return c < 0; })) return;
    drift_.assign(problem_.pieces.size(), 0);
    recurse(0, visit);
  }

 private:
  bool compatible(std::size_t a, int da, std::size_t b, int db) const {
    for (int delta : overlap_[a][b]) {
      if (db - da == delta) return false;
    }
    if (da - db > max_lead_[a][b]) return false;
    if (db - da > max_lead_[b][a]) return false;
    return true;
  }

  template <typename Visit>
  void recurse(std::size_t index, Visit& visit) {
    if (index == drift_.size()) {
      visit(std::span<const int>(drift_));
      return;
    }
    for (int d = 0; d <= caps_[index]; ++d) {
      if (std::find(blocked_[index].begin(), blocked_[index].end(), d) != blocked_[index].end()) continue;
      bool ok = true;
      for (std::size_t prior = 0; prior < index && ok; ++prior) {
        ok = compatible(prior, drift_[prior], index, d);
      }
      if (!ok) continue;
      drift_[index] = d;
      recurse(index + 1, visit);
    }
  }

  const DriftProblem& problem_;
  std::vector<int> caps_;
  std::vector<std::vector<int>> blocked_;
  std::vector<std::vector<std::vector<int>>> overlap_;
  std::vector<std::vector<int>> max_lead_;
  std::vector<int> drift_;
};

DriftProblem continent_problem(const PairGeometry& geometry) {
  DriftProblem problem;
  problem.pieces = geometry.pangaea.continents;
  for (const SpecialBox& s : geometry.pangaea.specials) problem.anchors.push_back(s.box);
  problem.fixed = geometry.pangaea.reference;
  problem.arena = geometry.arena;
  return problem;
}

}  // namespace

SpecialBoxes special_boxes_greedy(const Partition& lambda) {
  SpecialBoxes out;
  std::set<Box> special;
  const BoxSet boxes = lambda.boxes();
  for (int level = 0;; ++level) {
    BoxSet candidates;
    for (const Box& b : boxes) {
      if (special.count(b) || arm_length(lambda, b) != leg_length(lambda, b)) continue;
      const BoxSet h = hook(lambda, b);
      if (std::none_of(h.begin(), h.end(), [&](const Box& x) { return special.count(x) > 0; })) {
        candidates.push_back(b);
      }
    }
    if (candidates.empty()) break;
    BoxSet maximal;
    for (const Box& c : candidates) {
      const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                         [&](const Box& o) { return strictly_northeast_of(o, c); });
      if (!dominated) maximal.push_back(c);
    }
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      const BoxSet hi = hook(lambda, maximal[i]);
      for (std::size_t j = i + 1; j < maximal.size(); ++j) {
        const BoxSet hj = hook(lambda, maximal[j]);
        BoxSet common;
        std::set_intersection(hi.begin(), hi.end(), hj.begin(), hj.end(), std::back_inserter(common));
        if (!common.empty()) {
          throw Error(ErrorKind::AmbiguousMaximum,
                      "level " + std::to_string(level) + " candidates " + to_string(maximal[i]) +
                          " and " + to_string(maximal[j]) + " in " + lambda.to_string());
        }
      }
    }
    for (const Box& m : maximal) {
      special.insert(m);
      out.push_back({m, level});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialBox& a, const SpecialBox& b) { return a.box < b.box; });
  return out;
}

SpecialBoxes special_boxes_parens(const Partition& lambda) {
  SpecialBoxes out;
  for (const MatchedPair& p : parenthesis_pairs(lambda)) out.push_back({p.box, p.level});
  return out;
}

int Pangaea::continent_of(const Box& b) const {
  for (std::size_t k = 0; k < continents.size(); ++k) {
    if (std::binary_search(continents[k].begin(), continents[k].end(), b)) return static_cast<int>(k);
  }
  return -1;
}

Pangaea continents(const Partition& lambda) {
  Pangaea out;
  out.specials = special_boxes_parens(lambda);
  out.continents.resize(out.specials.size());
  for (const Box& x : lambda.boxes()) {
    std::vector<std::size_t> below;
    for (std::size_t k = 0; k < out.specials.size(); ++k) {
      if (weakly_southwest(out.specials[k].box, x)) below.push_back(k);
    }
    std::vector<std::size_t> maximal;
    for (std::size_t k : below) {
      const bool dominated = std::any_of(below.begin(), below.end(), [&](std::size_t o) {
        return strictly_northeast_of(out.specials[o].box, out.specials[k].box);
      });
      if (!dominated) maximal.push_back(k);
    }
    if (maximal.empty()) {
      out.reference.push_back(x);
    } else if (maximal.size() == 1) {
      out.continents[maximal.front()].push_back(x);
    } else {
      throw Error(ErrorKind::InternalInvariant,
                  "box " + to_string(x) + " has several maximal special boxes below it");
    }
  }
  for (auto& c : out.continents) std::sort(c.begin(), c.end());
  return out;
}

PairGeometry make_pair_geometry(const Permutation& v, const Permutation& w) {
  require_covexillary_pair(v, w);
  PairGeometry g;
  g.v = v;
  g.w = w;
  g.shape = shape(w);
  g.arena = bounding_partition(v, w);
  if (!g.shape.empty()) {
    if (!g.shape.contained_in(g.arena)) {
      throw Error(ErrorKind::InternalGeometry,
                  "shape " + g.shape.to_string() + " not inside " + g.arena.to_string());
    }
    g.flags = flag_vector(g.shape, g.arena);
    g.pangaea = continents(g.shape);
  }
  return g;
}

int DriftConfiguration::weight() const noexcept {
  int total = 0;
  for (int d : drift) total += d;
  return total;
}

int max_diagonal_shift(const BoxSet& region, const Partition& arena) {
  int best = std::numeric_limits<int>::max();
  for (const Box& b : region) {
    int d = -1;
    while (arena.contains({b.row + d + 1, b.col + d + 1})) ++d;
    best = std::min(best, d);
  }
  return region.empty() ? 0 : best;
}

bool is_valid_drift(const PairGeometry& geometry, std::span<const int> drift) {
  const Pangaea& p = geometry.pangaea;
  if (static_cast<int>(drift.size()) != p.size()) return false;
  std::set<Box> occupied(p.reference.begin(), p.reference.end());
  for (std::size_t k = 0; k < drift.size(); ++k) {
    if (drift[k] < 0) return false;
    for (const Box& b : p.continents[k]) {
      const Box moved{b.row + drift[k], b.col + drift[k]};
      if (!geometry.arena.contains(moved)) return false;
      if (!occupied.insert(moved).second) return false;
    }
  }
  for (std::size_t a = 0; a < drift.size(); ++a) {
    for (std::size_t b = 0; b < drift.size(); ++b) {
      const Box& sa = p.specials[a].box;
      const Box& sb = p.specials[b].box;
      if (a == b || !weakly_southwest(sa, sb)) continue;
      const Box ma{sa.row + drift[a], sa.col + drift[a]};
      const Box mb{sb.row + drift[b], sb.col + drift[b]};
      if (!weakly_southwest(ma, mb)) return false;
    }
  }
  return true;
}

std::vector<DriftConfiguration> enumerate_drift(const PairGeometry& geometry) {
  std::vector<DriftConfiguration> out;
  if (geometry.shape.empty()) return out;
  const DriftProblem problem = continent_problem(geometry);
  DriftSearch search(problem);
  search.run([&](std::span<const int> d) { out.push_back({{d.begin(), d.end()}}); });
  return out;
}

std::vector<DriftConfiguration> enumerate_drift(const Permutation& v, const Permutation& w) {
  return enumerate_drift(make_pair_geometry(v, w));
}

IntPolynomial q_polynomial(const PairGeometry& geometry) {
  if (geometry.shape.empty()) return IntPolynomial::constant(1);
  std::vector<std::int64_t> counts;
  const DriftProblem problem = continent_problem(geometry);
  DriftSearch search(problem);
  search.run([&](std::span<const int> d) {
    int weight = 0;
    for (int x : d) weight += x;
    if (static_cast<int>(counts.size()) <= weight) counts.resize(static_cast<std::size_t>(weight) + 1, 0);
    ++counts[static_cast<std::size_t>(weight)];
  });
  return IntPolynomial(std::move(counts));
}

IntPolynomial q_polynomial(const Permutation& v, const Permutation& w) {
  return q_polynomial(make_pair_geometry(v, w));
}

IntPolynomial country_drift_series(const PairGeometry& geometry) {
  if (geometry.shape.empty()) return IntPolynomial::constant(1);
  DriftProblem problem;
  for (const Box& b : geometry.shape.boxes()) {
    problem.pieces.push_back({b});
    problem.anchors.push_back(b);
  }
  problem.arena = geometry.arena;
  std::vector<std::int64_t> counts;
  DriftSearch search(problem);
  search.run([&](std::span<const int> d) {
    int weight = 0;
    for (int x : d) weight += x;
    if (static_cast<int>(counts.size()) <= weight) counts.resize(static_cast<std::size_t>(weight) + 1, 0);
    ++counts[static_cast<std::size_t>(weight)];
  });
  return IntPolynomial(std::move(counts));
}

IntPolynomial country_drift_series(const Permutation& v, const Permutation& w) {
  return country_drift_series(make_pair_geometry(v, w));
}

std::string LascouxTree::describe() const {
  std::ostringstream out;
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    const Node& node = nodes[k];
    if (k > 1) out << "; ";
    out << to_string(node.special) << " <- ";
    out << (node.parent == 0 ? std::string("root")
                             : to_string(nodes[static_cast<std::size_t>(node.parent)].special));
    if (node.leaf_bound >= 0) out << " [bound " << node.leaf_bound << "]";
  }
  return out.str();
}

LascouxTree lascoux_tree(const PairGeometry& geometry) {
  const Pangaea& p = geometry.pangaea;
  LascouxTree tree;
  tree.nodes.resize(static_cast<std::size_t>(p.size()) + 1);
  auto adjacent = [&](std::size_t a, std::size_t b) {
    for (const Box& x : p.continents[a]) {
      for (const Box& y : p.continents[b]) {
        if (std::abs(x.row - y.row) + std::abs(x.col - y.col) == 1) return true;
      }
    }
    return false;
  };
  for (std::size_t k = 0; k < p.specials.size(); ++k) {
    auto& node = tree.nodes[k + 1];
    node.special = p.specials[k].box;
    std::vector<std::size_t> below;
    for (std::size_t l = 0; l < p.specials.size(); ++l) {
      if (l != k && weakly_southwest(p.specials[l].box, p.specials[k].box) && adjacent(k, l)) {
        below.push_back(l);
      }
    }
    std::vector<std::size_t> maximal;
    for (std::size_t l : below) {
      if (std::none_of(below.begin(), below.end(), [&](std::size_t o) {
            return strictly_northeast_of(p.specials[o].box, p.specials[l].box);
          })) {
        maximal.push_back(l);
      }
    }
    if (maximal.size() > 1) {
      throw Error(ErrorKind::InternalInvariant, "continent " + to_string(node.special) + " has two parents");
    }
    node.parent = maximal.empty() ? 0 : static_cast<int>(maximal.front()) + 1;
    tree.nodes[static_cast<std::size_t>(node.parent)].children.push_back(static_cast<int>(k) + 1);
  }
  for (std::size_t k = 1; k < tree.nodes.size(); ++k) {
    auto& node = tree.nodes[k];
    if (!node.children.empty()) continue;
    const int h = node.special.row;
    if (geometry.shape[h] != node.special.col || geometry.shape[h + 1] >= geometry.shape[h]) {
      throw Error(ErrorKind::InternalInvariant, "leaf " + to_string(node.special) + " is not a corner");
    }
    node.leaf_bound = geometry.flags[h] - h;
  }
  return tree;
}

LascouxTree lascoux_tree(const Permutation& v, const Permutation& w) {
  return lascoux_tree(make_pair_geometry(v, w));
}

LascouxTree parenthesis_tree(const Partition& lambda) {
  const std::vector<MatchedPair> pairs = parenthesis_pairs(lambda);
  LascouxTree tree;
  tree.nodes.resize(pairs.size() + 1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto& node = tree.nodes[k + 1];
    node.special = pairs[k].box;
    int parent = 0;
    int best_width = std::numeric_limits<int>::max();
    for (std::size_t o = 0; o < pairs.size(); ++o) {
      if (o == k) continue;
      if (pairs[o].open < pairs[k].open && pairs[k].close < pairs[o].close &&
          pairs[o].close - pairs[o].open < best_width) {
        best_width = pairs[o].close - pairs[o].open;
        parent = static_cast<int>(o) + 1;
      }
    }
    node.parent = parent;
  }
  for (std::size_t k = 1; k < tree.nodes.size(); ++k) {
    tree.nodes[static_cast<std::size_t>(tree.nodes[k].parent)].children.push_back(static_cast<int>(k));
  }
  return tree;
}

bool same_shape(const LascouxTree& a, const LascouxTree& b) {
  auto parent_map = [](const LascouxTree& t) {
    std::vector<std::pair<Box, Box>> edges;
    for (std::size_t k = 1; k < t.nodes.size(); ++k) {
      const int p = t.nodes[k].parent;
      edges.push_back({t.nodes[k].special, p == 0 ? Box{0, 0} : t.nodes[static_cast<std::size_t>(p)].special});
    }
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  return parent_map(a) == parent_map(b);
}

std::vector<EdgeLabeling> enumerate_labelings(const LascouxTree& tree) {
  const std::size_t count = tree.nodes.size();
  // Children are appended after their parent in a BFS order so parents are
  // always labelled first.
  std::vector<int> order;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int node = queue[head];
    if (node != 0) order.push_back(node);
    for (int child : tree.nodes[static_cast<std::size_t>(node)].children) queue.push_back(child);
  }
  // Implicit cap: the smallest leaf bound in the subtree.
  std::vector<int> cap(count, std::numeric_limits<int>::max());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& node = tree.nodes[static_cast<std::size_t>(*it)];
    int c = node.children.empty() ? node.leaf_bound : std::numeric_limits<int>::max();
    for (int child : node.children) c = std::min(c, cap[static_cast<std::size_t>(child)]);
    cap[static_cast<std::size_t>(*it)] = c;
  }
  std::vector<EdgeLabeling> out;
  EdgeLabeling labels(count, 0);
  auto recurse = [&](auto&& self, std::size_t index) -> void {
    if (index == order.size()) {
      out.push_back(labels);
      return;
    }
    const int node = order[index];
    const int parent = tree.nodes[static_cast<std::size_t>(node)].parent;
    const int lo = parent == 0 ? 0 : labels[static_cast<std::size_t>(parent)];
    for (int x = lo; x <= cap[static_cast<std::size_t>(node)]; ++x) {
      labels[static_cast<std::size_t>(node)] = x;
      self(self, index + 1);
    }
    labels[static_cast<std::size_t>(node)] = 0;
  };
  recurse(recurse, 0);
  return out;
}

int labeling_weight(const EdgeLabeling& labels) {
  int total = 0;
  for (int x : labels) total += x;
  return total;
}

Permutation Bigrassmannian::expand() const {
  std::vector<int> values;
  for (int x = 1; x <= a; ++x) values.push_back(x);
  for (int x = a + c + 1; x <= a + c + b; ++x) values.push_back(x);
  for (int x = a + 1; x <= a + c; ++x) values.push_back(x);
  for (int x = a + b + c + 1; x <= n(); ++x) values.push_back(x);
  return make_permutation(values);
}

bool bigrassmannian_leq(const Bigrassmannian& g, const Permutation& vtilde) {
  if (g.n() != vtilde.size()) {
    throw Error(ErrorKind::RankMismatch, "bigrassmannian of rank " + std::to_string(g.n()) +
                                             " vs S_" + std::to_string(vtilde.size()));
  }
  if (g.a < 0 || g.b < 0 || g.c < 0 || g.d < 0) return false;
  const Permutation v = compose(longest_element(vtilde.size()), inverse(vtilde));
  const Box corner{g.a + g.b, g.a + g.c};
  const int rank = (corner.row == 0 || corner.col == 0) ? 0 : rank_sw(v, corner);
  return rank <= g.a;
}

int bigrassmannian_distance(const Bigrassmannian& g, const Permutation& vtilde) {
  if (!bigrassmannian_leq(g, vtilde)) {
    throw Error(ErrorKind::NotBelow, "bigrassmannian is not below " + vtilde.to_string());
  }
  int best = 0;
  for (int r = 1; r <= std::min(g.a, g.d); ++r) {
    if (bigrassmannian_leq({g.a - r, g.b + r, g.c + r, g.d - r}, vtilde)) best = r;
  }
  return best;
}

std::vector<LeafCrossing> leaf_crossings(const PairGeometry& geometry) {
  std::vector<LeafCrossing> out;
  const int n = geometry.w.size();
  const BoxSet essential = essential_set(geometry.w);
  for (const Box& corner : geometry.shape.corners()) {
    std::vector<Box> on_diagonal;
    for (const Box& e : essential) {
      if (e.row - e.col == corner.row - corner.col && e.row >= corner.row) on_diagonal.push_back(e);
    }
    if (on_diagonal.size() != 1) {
      throw Error(ErrorKind::InternalInvariant,
                  "corner " + to_string(corner) + " has " + std::to_string(on_diagonal.size()) +
                      " essential boxes on its diagonal");
    }
    LeafCrossing leaf;
    leaf.corner = corner;
    leaf.essential = on_diagonal.front();
    leaf.rank_w = rank_sw(geometry.w, leaf.essential);
    leaf.rank_v = rank_sw(geometry.v, leaf.essential);
    const int z = leaf.rank_w;
    leaf.g = {z, leaf.essential.row - z, leaf.essential.col - z,
              n - leaf.essential.col - leaf.essential.row + z};
    out.push_back(leaf);
  }
  return out;
}

}  // namespace driftkl
