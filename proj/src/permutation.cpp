#include "driftkl/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "driftkl/error.hpp"

namespace driftkl {

Permutation Permutation::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::compact() const {
  if (values_.size() > 9) return to_string();
  std::string out;
  for (int x : values_) out += static_cast<char>('0' + x);
  return out;
}

Permutation make_permutation(std::span<const int> values) {
  if (values.empty()) {
    throw Error(ErrorKind::NotABijection, "empty sequence");
  }
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : values) {
    if (x < 1 || x > n) {
      throw Error(ErrorKind::NotABijection,
                  "value " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::NotABijection, "value " + std::to_string(x) + " repeated");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation make_permutation(std::initializer_list<int> values) {
  return make_permutation(std::span<const int>(values.begin(), values.size()));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw Error(ErrorKind::ParseError, "expected integer in '" + std::string(text) + "'");
    }
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(ErrorKind::ParseError, "expected ',' in '" + std::string(text) + "'");
    }
    ++pos;
    skip_space();
    if (pos == text.size()) {
      throw Error(ErrorKind::ParseError, "trailing ',' in '" + std::string(text) + "'");
    }
  }
  if (values.empty()) throw Error(ErrorKind::ParseError, "empty permutation");
  return make_permutation(values);
}

Permutation inverse(const Permutation& w) {
  std::vector<int> inv(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) inv[static_cast<std::size_t>(w(i) - 1)] = i;
  return make_permutation(inv);
}

Permutation compose(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) {
    throw Error(ErrorKind::RankMismatch, "compose: S_" + std::to_string(w.size()) +
                                             " vs S_" + std::to_string(v.size()));
  }
  std::vector<int> out(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(i - 1)] = w(v(i));
  return make_permutation(out);
}

Permutation longest_element(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = n - i;
  return make_permutation(values);
}

int coxeter_length(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) ++count;
    }
  }
  return count;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorKind::RankMismatch, "bruhat_leq: S_" + std::to_string(v.size()) +
                                             " vs S_" + std::to_string(w.size()));
  }
  const int n = v.size();
  // counts[j] = #{k <= i : x(k) >= j}, maintained row by row.
  std::vector<int> cv(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> cw(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= v(i); ++j) ++cv[static_cast<std::size_t>(j)];
    for (int j = 1; j <= w(i); ++j) ++cw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j) {
      if (cv[static_cast<std::size_t>(j)] > cw[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

bool is_covexillary(const Permutation& w) {
  const int n = w.size();
  // Look for a < b < c < d with w(c) < w(d) < w(a) < w(b).
  for (int b = 2; b <= n; ++b) {
    for (int a = 1; a < b; ++a) {
      if (w(a) >= w(b)) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (w(c) >= w(a)) continue;
        for (int d = c + 1; d <= n; ++d) {
          if (w(d) > w(c) && w(d) < w(a)) return false;
        }
      }
    }
  }
  return true;
}

Permutation left_multiply_simple(int i, const Permutation& w) {
  std::vector<int> out(w.values().begin(), w.values().end());
  for (int& x : out) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return make_permutation(out);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(make_permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::size_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::size_t smaller_later = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) < w(i)) ++smaller_later;
    }
    rank = rank * static_cast<std::size_t>(n - i + 1) + smaller_later;
  }
  return rank;
}

}  // namespace driftkl
