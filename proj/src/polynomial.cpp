#include "driftkl/polynomial.hpp"

#include <algorithm>

#include "driftkl/error.hpp"

namespace driftkl {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer addition overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer multiplication overflow");
  }
  return out;
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int exponent, std::int64_t c) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(exponent) + 1, 0);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coeff(int exponent) const noexcept {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

std::int64_t IntPolynomial::evaluate(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, q), *it);
  }
  return acc;
}

bool IntPolynomial::has_nonnegative_coefficients() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

bool IntPolynomial::is_palindromic() const noexcept {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

bool IntPolynomial::is_unimodal() const noexcept {
  std::size_t i = 0;
  while (i + 1 < coeffs_.size() && coeffs_[i] <= coeffs_[i + 1]) ++i;
  while (i + 1 < coeffs_.size() && coeffs_[i] >= coeffs_[i + 1]) ++i;
  return i + 1 >= coeffs_.size();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
  }
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) { return *this += -rhs; }

IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial out = a;
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::shifted(int by) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(by), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

namespace {

std::string render(const std::vector<std::int64_t>& coeffs, bool latex) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    const std::int64_t c = coeffs[e];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (e == 0 || mag != 1) out += std::to_string(mag);
    if (e >= 1) out += 'q';
    if (e >= 2) {
      out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace

std::string IntPolynomial::to_string() const { return render(coeffs_, false); }
std::string IntPolynomial::to_latex() const { return render(coeffs_, true); }

IntPolynomial exact_divide(const IntPolynomial& numerator, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::InternalInvariant, "division by zero polynomial");
  if (numerator.is_zero()) return {};
  std::vector<std::int64_t> rem(numerator.coefficients().begin(), numerator.coefficients().end());
  const int dd = divisor.degree();
  const std::int64_t lead = divisor.coeff(dd);
  if (numerator.degree() < dd) {
    throw Error(ErrorKind::InternalInvariant, "inexact polynomial division");
  }
  std::vector<std::int64_t> quot(static_cast<std::size_t>(numerator.degree() - dd) + 1, 0);
  for (int e = numerator.degree(); e >= dd; --e) {
    const std::int64_t top = rem[static_cast<std::size_t>(e)];
    if (top == 0) continue;
    if (top % lead != 0) throw Error(ErrorKind::InternalInvariant, "inexact polynomial division");
    const std::int64_t factor = top / lead;
    quot[static_cast<std::size_t>(e - dd)] = factor;
    for (int k = 0; k <= dd; ++k) {
      auto& slot = rem[static_cast<std::size_t>(e - dd + k)];
      slot = checked_add(slot, checked_mul(-factor, divisor.coeff(k)));
    }
  }
  for (std::int64_t r : rem) {
    if (r != 0) throw Error(ErrorKind::InternalInvariant, "inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

}  // namespace driftkl
