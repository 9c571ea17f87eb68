#pragma once

#include <vector>

#include "driftkl/diagram.hpp"
#include "driftkl/permutation.hpp"
#include "driftkl/polynomial.hpp"

namespace driftkl {

/// q^shift * poly, with possibly negative shift. Only used transiently.
struct LaurentShift {
  IntPolynomial poly;
  int shift = 0;

  /// Throws Error{NegativeExponent} if a term with negative exponent remains.
  IntPolynomial resolve() const;
};

/// [a]_q = 1 + q + ... + q^{a-1}; zero for a <= 0.
IntPolynomial q_integer(int a);

/// Gaussian binomial; zero when b < 0 or b > a.
IntPolynomial q_binomial(int a, int b);

/// Fraction-free (Bareiss) determinant over Z[q].
IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> matrix);

/// q^{-sum (i-1) lambda_i} det( [b_i + lambda_i - i + j - 1 choose lambda_i - i + j]_q ).
IntPolynomial htilde_determinant(const Permutation& v, const Permutation& w);
IntPolynomial htilde_determinant(const Partition& lambda, const FlagVector& flags);

/// Every coefficient of p is at most the matching coefficient of h.
bool coefficientwise_leq(const IntPolynomial& p, const IntPolynomial& h);

}  // namespace driftkl
