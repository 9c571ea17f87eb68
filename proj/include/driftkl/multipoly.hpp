#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "driftkl/polynomial.hpp"

namespace driftkl {

/// Sparse integer polynomial in variables x_0..x_{k-1}. A monomial is its
/// exponent vector with trailing zeros stripped, so the key set is canonical
/// regardless of how many variables are in play.
class MultiPoly {
 public:
  using Monomial = std::vector<int>;

  MultiPoly() = default;
  static MultiPoly constant(std::int64_t c);
  static MultiPoly variable(int index);
  /// 1 - x_index
  static MultiPoly one_minus(int index);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coeff(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Replace x_index by `value` everywhere.
  MultiPoly substitute(int index, const MultiPoly& value) const;
  /// Replace every x_k by value[k]; variables past the end stay as they are.
  MultiPoly substitute_all(const std::vector<MultiPoly>& values) const;
  /// Univariate image under x_k -> q^{exponents[k]}.
  IntPolynomial principal(const std::vector<int>& exponents) const;
  std::int64_t evaluate(const std::vector<std::int64_t>& point) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(Monomial m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

}  // namespace driftkl
