#include "driftkl/qseries.hpp"

#include <algorithm>
#include <utility>

#include "driftkl/error.hpp"

namespace driftkl {

IntPolynomial LaurentShift::resolve() const {
  if (shift >= 0) return poly.shifted(shift);
  const int drop = -shift;
  for (int e = 0; e < drop && e <= poly.degree(); ++e) {
    if (poly.coeff(e) != 0) {
      throw Error(ErrorKind::NegativeExponent,
                  "term q^" + std::to_string(e - drop) + " survives the prefactor");
    }
  }
  auto coeffs = poly.coefficients();
  if (static_cast<int>(coeffs.size()) <= drop) return {};
  return IntPolynomial(std::vector<std::int64_t>(coeffs.begin() + drop, coeffs.end()));
}

IntPolynomial q_integer(int a) {
  if (a <= 0) return {};
  return IntPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(a), 1));
}

IntPolynomial q_binomial(int a, int b) {
  if (b < 0 || b > a) return {};
  IntPolynomial numerator = IntPolynomial::constant(1);
  IntPolynomial denominator = IntPolynomial::constant(1);
  for (int k = 0; k < b; ++k) {
    numerator *= q_integer(a - k);
    denominator *= q_integer(k + 1);
  }
  return exact_divide(numerator, denominator);
}

IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t size = m.size();
  if (size == 0) return IntPolynomial::constant(1);
  for (const auto& row : m) {
    if (row.size() != size) throw Error(ErrorKind::InternalInvariant, "determinant of non-square matrix");
  }
  bool negate = false;
  IntPolynomial previous = IntPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < size && m[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == size) return {};
      std::swap(m[k], m[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  IntPolynomial det = m[size - 1][size - 1];
  return negate ? -det : det;
}

IntPolynomial htilde_determinant(const Partition& lambda, const FlagVector& flags) {
  if (lambda.empty()) return IntPolynomial::constant(1);
  const int rows = lambda.num_rows();
  if (flags.size() != rows) throw Error(ErrorKind::FlagMismatch, "flag length differs from shape");
  std::vector<std::vector<IntPolynomial>> matrix(static_cast<std::size_t>(rows));
  int prefactor = 0;
  for (int i = 1; i <= rows; ++i) {
    prefactor += (i - 1) * lambda[i];
    auto& row = matrix[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= rows; ++j) {
      row.push_back(q_binomial(flags[i] + lambda[i] - i + j - 1, lambda[i] - i + j));
    }
  }
  return LaurentShift{determinant(std::move(matrix)), -prefactor}.resolve();
}

IntPolynomial htilde_determinant(const Permutation& v, const Permutation& w) {
  require_covexillary_pair(v, w);
  const Partition lambda = shape(w);
  if (lambda.empty()) return IntPolynomial::constant(1);
  return htilde_determinant(lambda, flag_vector(v, w));
}

bool coefficientwise_leq(const IntPolynomial& p, const IntPolynomial& h) {
  const int top = std::max(p.degree(), h.degree());
  for (int e = 0; e <= top; ++e) {
    if (p.coeff(e) > h.coeff(e)) return false;
  }
  return true;
}

}  // namespace driftkl
