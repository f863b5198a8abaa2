#pragma once

#include <vector>

#include "kaz/rational.hpp"

namespace kaz {

/// Dense polynomial in Z[x]; coeffs[i] multiplies x^i. Trailing zeros are trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial constant(const Integer& c) { return IntPolynomial({c}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  /// Multiplicity of x = 0 as a root; 0 for the zero polynomial.
  int order_at_zero() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// a / b when b divides a exactly in Z[x]; throws InvariantViolation otherwise.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Fraction-free (Bareiss) determinant of a square matrix over Z[x].
IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m);

/// Degree of gcd(a, b) over Q after removing every factor of x. Positive
/// exactly when a and b share a nonzero complex root. Both inputs nonzero.
int common_nonzero_root_degree(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace kaz
