#include "driftkl/multipoly.hpp"

#include <sstream>

#include "driftkl/error.hpp"

namespace driftkl {
namespace {

void strip(MultiPoly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(std::int64_t c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(int index) {
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m.back() = 1;
  MultiPoly p;
  p.add_term(std::move(m), 1);
  return p;
}

MultiPoly MultiPoly::one_minus(int index) { return constant(1) - variable(index); }

std::int64_t MultiPoly::coeff(const Monomial& m) const {
  Monomial key = m;
  strip(key);
  const auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(Monomial m, std::int64_t c) {
  if (c == 0) return;
  strip(m);
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : rhs.terms_) {
      Monomial m(std::max(a.size(), b.size()), 0);
      for (std::size_t k = 0; k < a.size(); ++k) m[k] += a[k];
      for (std::size_t k = 0; k < b.size(); ++k) m[k] += b[k];
      out.add_term(std::move(m), checked_mul(ca, cb));
    }
  }
  *this = std::move(out);
  return *this;
}

MultiPoly MultiPoly::substitute(int index, const MultiPoly& value) const {
  std::vector<MultiPoly> values(static_cast<std::size_t>(index) + 1);
  for (int k = 0; k < index; ++k) values[static_cast<std::size_t>(k)] = variable(k);
  values.back() = value;
  return substitute_all(values);
}

MultiPoly MultiPoly::substitute_all(const std::vector<MultiPoly>& values) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    MultiPoly term = constant(c);
    Monomial rest(m.size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k < values.size()) {
        for (int e = 0; e < m[k]; ++e) term *= values[k];
      } else {
        rest[k] = m[k];
      }
    }
    MultiPoly keep;
    keep.add_term(std::move(rest), 1);
    out += term * keep;
  }
  return out;
}

IntPolynomial MultiPoly::principal(const std::vector<int>& exponents) const {
  IntPolynomial out;
  for (const auto& [m, c] : terms_) {
    int degree = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (k >= exponents.size()) {
        throw Error(ErrorKind::InternalInvariant, "no exponent for variable " + std::to_string(k));
      }
      degree += m[k] * exponents[k];
    }
    if (degree < 0) throw Error(ErrorKind::NegativeExponent, "principal specialization");
    out += IntPolynomial::monomial(degree, c);
  }
  return out;
}

std::int64_t MultiPoly::evaluate(const std::vector<std::int64_t>& point) const {
  std::int64_t out = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t term = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (k >= point.size()) throw Error(ErrorKind::InternalInvariant, "evaluation point too short");
      term = checked_mul(term, checked_pow(point[k], m[k]));
    }
    out = checked_add(out, term);
  }
  return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool unit = m.empty();
    if (!first) out << (c < 0 ? "-" : "+");
    else if (c < 0) out << '-';
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || unit) out << a;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      out << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (m[k] > 1) out << '^' << m[k];
    }
  }
  return out.str();
}

}  // namespace driftkl
