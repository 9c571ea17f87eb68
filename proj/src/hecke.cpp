#include "driftkl/hecke.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "driftkl/error.hpp"

namespace driftkl {

struct KLTable::Column {
  // Sorted indices of the Bruhat interval [e, w] with the matching P_{v,w}.
  std::vector<std::uint32_t> lower;
  std::vector<IntPolynomial> poly;
  // (z, mu(z,w)) for z < w with mu != 0.
  std::vector<std::pair<std::uint32_t, std::int64_t>> mu;

  const IntPolynomial* find(std::uint32_t v) const {
    const auto it = std::lower_bound(lower.begin(), lower.end(), v);
    if (it == lower.end() || *it != v) return nullptr;
    return &poly[static_cast<std::size_t>(it - lower.begin())];
  }
};

KLTable::KLTable(int n, DescentChoice descent) : n_(n), descent_(descent) {
  if (n > kMaxRank) {
    throw Error(ErrorKind::RankTooLarge, "KL table supports n <= " + std::to_string(kMaxRank));
  }
  if (n < 1) throw Error(ErrorKind::RankMismatch, "rank must be positive");
  perms_ = all_permutations(n);
  const std::size_t count = perms_.size();
  length_.resize(count);
  for (std::size_t x = 0; x < count; ++x) length_[x] = coxeter_length(perms_[x]);
  left_.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(count));
  for (int i = 1; i < n; ++i) {
    for (std::size_t x = 0; x < count; ++x) {
      left_[static_cast<std::size_t>(i)][x] = static_cast<std::uint32_t>(lex_rank(left_multiply_simple(i, perms_[x])));
    }
  }
  columns_.resize(count);
  ready_ = std::make_unique<std::atomic<bool>[]>(count);
  for (std::size_t x = 0; x < count; ++x) ready_[x].store(false, std::memory_order_relaxed);
}

KLTable::~KLTable() = default;

std::size_t KLTable::index_of(const Permutation& p) const {
  if (p.size() != n_) {
    throw Error(ErrorKind::RankMismatch, "expected S_" + std::to_string(n_) + ", got " + p.to_string());
  }
  return lex_rank(p);
}

int KLTable::pick_descent(std::size_t w) const {
  // s_i is a left descent iff i+1 precedes i in one-line notation.
  const Permutation winv = inverse(perms_[w]);
  int chosen = 0;
  for (int i = 1; i < n_; ++i) {
    if (winv(i) > winv(i + 1)) {
      chosen = i;
      if (descent_ == DescentChoice::Leftmost) break;
    }
  }
  return chosen;
}

const KLTable::Column& KLTable::column(std::size_t w) {
  if (ready_[w].load(std::memory_order_acquire)) return *columns_[w];
  return column_locked(w);
}

const KLTable::Column& KLTable::column_locked(std::size_t w) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (!ready_[w].load(std::memory_order_acquire)) {
    // Make every dependency ready first, then build without further locking.
    const int i = pick_descent(w);
    if (i != 0) {
      const std::size_t u = left_[static_cast<std::size_t>(i)][w];
      const Column& cu = column_locked(u);
      for (const auto& [z, m] : cu.mu) column_locked(z);
    }
    build_column(w);
  }
  return *columns_[w];
}

void KLTable::build_column(std::size_t w) {
  auto col = std::make_unique<Column>();
  const int i = pick_descent(w);
  if (i == 0) {
    col->lower.push_back(static_cast<std::uint32_t>(w));
    col->poly.push_back(IntPolynomial::constant(1));
  } else {
    const auto& s = left_[static_cast<std::size_t>(i)];
    const std::size_t u = s[w];
    const Column& cu = *columns_[u];
    // v <= w iff min(v, sv) <= sw.
    std::vector<std::uint32_t> lower;
    for (std::uint32_t v : cu.lower) {
      lower.push_back(v);
      lower.push_back(s[v]);
    }
    std::sort(lower.begin(), lower.end());
    lower.erase(std::unique(lower.begin(), lower.end()), lower.end());

    std::vector<std::pair<std::uint32_t, std::int64_t>> correction;
    for (const auto& [z, m] : cu.mu) {
      if (length_[s[z]] < length_[z]) correction.emplace_back(z, m);
    }
    col->lower = std::move(lower);
    col->poly.reserve(col->lower.size());
    for (std::uint32_t v : col->lower) {
      const std::uint32_t sv = s[v];
      const int c = length_[sv] < length_[v] ? 1 : 0;
      IntPolynomial p;
      if (const IntPolynomial* a = cu.find(sv)) p += a->shifted(1 - c);
      if (const IntPolynomial* b = cu.find(v)) p += b->shifted(c);
      for (const auto& [z, m] : correction) {
        const IntPolynomial* pz = columns_[z]->find(v);
        if (pz == nullptr) continue;
        const int gap = length_[w] - length_[z];
        if (gap % 2 != 0) {
          throw Error(ErrorKind::InternalHalfPower,
                      "odd exponent from " + perms_[z].to_string() + " in column " + perms_[w].to_string());
        }
        p -= pz->shifted(gap / 2) * IntPolynomial::constant(m);
      }
      const int span = length_[w] - length_[v];
      const bool sane = p.has_nonnegative_coefficients() && p.coeff(0) == 1 &&
                        (static_cast<std::size_t>(v) == w ? p.degree() == 0 : 2 * p.degree() <= span - 1);
      if (!sane) {
        throw Error(ErrorKind::InternalInvariant, "P_{" + perms_[v].to_string() + "," + perms_[w].to_string() +
                                                      "} = " + p.to_string());
      }
      col->poly.push_back(std::move(p));
    }
  }
  for (std::size_t k = 0; k < col->lower.size(); ++k) {
    const std::uint32_t z = col->lower[k];
    const int span = length_[w] - length_[z];
    if (span % 2 == 0) continue;
    const std::int64_t m = col->poly[k].coeff((span - 1) / 2);
    if (m != 0) col->mu.emplace_back(z, m);
  }
  columns_[w] = std::move(col);
  ready_[w].store(true, std::memory_order_release);
}

void KLTable::precompute(Execution mode) {
  const int top = n_ * (n_ - 1) / 2;
  std::vector<std::vector<std::size_t>> levels(static_cast<std::size_t>(top) + 1);
  for (std::size_t x = 0; x < perms_.size(); ++x) levels[static_cast<std::size_t>(length_[x])].push_back(x);
  // Columns of one length depend only on shorter ones.
  for (const auto& level : levels) {
    const std::int64_t count = static_cast<std::int64_t>(level.size());
    if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t k = 0; k < count; ++k) {
        const std::size_t w = level[static_cast<std::size_t>(k)];
        if (!ready_[w].load(std::memory_order_acquire)) build_column(w);
      }
    } else {
      for (std::int64_t k = 0; k < count; ++k) {
        const std::size_t w = level[static_cast<std::size_t>(k)];
        if (!ready_[w].load(std::memory_order_acquire)) build_column(w);
      }
    }
  }
}

std::size_t KLTable::computed_columns() const noexcept {
  std::size_t total = 0;
  for (std::size_t x = 0; x < perms_.size(); ++x) total += ready_[x].load(std::memory_order_acquire) ? 1 : 0;
  return total;
}

IntPolynomial KLTable::polynomial(const Permutation& v, const Permutation& w) {
  const std::size_t vi = index_of(v);
  const std::size_t wi = index_of(w);
  const IntPolynomial* p = column(wi).find(static_cast<std::uint32_t>(vi));
  return p ? *p : IntPolynomial{};
}

std::int64_t KLTable::mu(const Permutation& v, const Permutation& w) {
  const IntPolynomial p = polynomial(v, w);
  if (p.is_zero() || v == w) {
    throw Error(ErrorKind::NotStrictlyBelow, v.to_string() + " is not strictly below " + w.to_string());
  }
  const int span = coxeter_length(w) - coxeter_length(v);
  return span % 2 == 0 ? 0 : p.coeff((span - 1) / 2);
}

bool KLTable::leq(const Permutation& v, const Permutation& w) { return !polynomial(v, w).is_zero(); }

KLTable& shared_kl_table(int n) {
  if (n > KLTable::kMaxRank) {
    throw Error(ErrorKind::RankTooLarge, "KL table supports n <= " + std::to_string(KLTable::kMaxRank));
  }
  if (n < 1) throw Error(ErrorKind::RankMismatch, "rank must be positive");
  static std::mutex guard;
  static std::array<std::unique_ptr<KLTable>, KLTable::kMaxRank + 1> tables;
  std::lock_guard<std::mutex> lock(guard);
  auto& slot = tables[static_cast<std::size_t>(n)];
  if (!slot) slot = std::make_unique<KLTable>(n);
  return *slot;
}

IntPolynomial kl_polynomial(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorKind::RankMismatch, v.to_string() + " and " + w.to_string());
  }
  return shared_kl_table(w.size()).polynomial(v, w);
}

std::int64_t mu_coefficient(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorKind::RankMismatch, v.to_string() + " and " + w.to_string());
  }
  return shared_kl_table(w.size()).mu(v, w);
}

}  // namespace driftkl
