#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace driftkl {

/// Dense integer polynomial in q, coefficients indexed by exponent.
///
/// Canonical form has no trailing zeros, so the zero polynomial has no
/// coefficients. Arithmetic is exact: any int64 overflow throws
/// Error{Overflow} instead of wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial monomial(int exponent, std::int64_t c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const noexcept;
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }

  std::int64_t evaluate(std::int64_t q) const;
  bool has_nonnegative_coefficients() const noexcept;
  bool is_palindromic() const noexcept;
  bool is_unimodal() const noexcept;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial shifted(int by) const;  // multiply by q^by, by >= 0

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(const IntPolynomial& a);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "1+2q+q^2"
  std::string to_string() const;
  /// "1+2q+q^{2}"
  std::string to_latex() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Exact division; throws Error{InternalInvariant} when the divisor does not
/// divide or is zero.
IntPolynomial exact_divide(const IntPolynomial& numerator, const IntPolynomial& divisor);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace driftkl
