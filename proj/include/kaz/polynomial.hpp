#pragma once

#include <map>
#include <span>
#include <vector>

#include "kaz/polytope.hpp"

namespace kaz {

using Exponent = std::vector<int>;

/// <coeffs, x> + constant.
struct LinearForm {
  RationalVector coeffs;
  Rational constant;
};

/// Sparse exact polynomial in a fixed number of variables. Zero coefficients
/// are never stored.
class MultivariatePolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit MultivariatePolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultivariatePolynomial constant(std::size_t num_vars, const Rational& c);
  static MultivariatePolynomial variable(std::size_t num_vars, std::size_t i);
  static MultivariatePolynomial linear(const LinearForm& form);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);
  Rational evaluate(const RationalVector& x) const;

  MultivariatePolynomial& operator+=(const MultivariatePolynomial& other);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& other);
  MultivariatePolynomial& operator*=(const Rational& c);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a += b; }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a -= b; }
  friend MultivariatePolynomial operator*(const Rational& c, MultivariatePolynomial a) { return a *= c; }
  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  friend bool operator==(const MultivariatePolynomial&, const MultivariatePolynomial&) = default;

 private:
  std::size_t num_vars_;
  Terms terms_;
};

MultivariatePolynomial pow(const MultivariatePolynomial& p, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const MultivariatePolynomial& p);

/// Expanded product of the forms; the empty product is 1.
MultivariatePolynomial product_of_linear_forms(std::size_t num_vars, std::span<const LinearForm> forms);

/// Sum of the terms of maximal total degree. Throws UserError for F = 0.
MultivariatePolynomial homogeneous_top(const MultivariatePolynomial& f);

/// F(images_0(y), ..., images_{n-1}(y)) as a polynomial in y.
MultivariatePolynomial compose_linear(const MultivariatePolynomial& f, std::span<const LinearForm> images,
                                      std::size_t new_vars);

/// Exact integral against the lattice-normalized measure on the affine hull of S,
/// via barycentric substitution and the Dirichlet monomial formula.
Rational integrate_over_simplex(const MultivariatePolynomial& f, const Simplex& s);

/// Integral against the ambient lattice-normalized measure (zero unless P is
/// full-dimensional), summed over triangulate(P).
Rational integrate_over_polytope(const MultivariatePolynomial& f, const RationalPolytope& p,
                                 Execution exec = Execution::parallel);

}  // namespace kaz
