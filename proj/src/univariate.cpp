#include "kaz/univariate.hpp"

#include <algorithm>

#include "kaz/error.hpp"

namespace kaz {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPolynomial::order_at_zero() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return is_zero() ? 0 : k;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvariantViolation("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvariantViolation("inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Integer& lead = b.coeffs().back();
  std::vector<Integer> quot(rem.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& top = rem[i + db];
    if (top % lead != 0) throw InvariantViolation("inexact polynomial division");
    Integer c = top / lead;
    quot[i] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= c * b.coeffs()[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& z) { return z != 0; }))
    throw InvariantViolation("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  bool negate = false;
  IntPolynomial prev = IntPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    }
    prev = m[k][k];
  }
  IntPolynomial d = m[n - 1][n - 1];
  return negate ? IntPolynomial() - d : d;
}

namespace {

std::vector<Rational> to_rational_coeffs(const IntPolynomial& p) {
  std::vector<Rational> c;
  for (std::size_t i = static_cast<std::size_t>(p.order_at_zero()); i < p.coeffs().size(); ++i)
    c.emplace_back(p.coeffs()[i]);
  return c;
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

int common_nonzero_root_degree(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) throw UserError("gcd of the zero polynomial");
  std::vector<Rational> x = to_rational_coeffs(a), y = to_rational_coeffs(b);
  // Euclid over Q; both inputs have nonzero constant terms, so the gcd does too.
  while (!y.empty()) {
    while (x.size() >= y.size() && !x.empty()) {
      Rational c = x.back() / y.back();
      std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j) x[shift + j] -= c * y[j];
      trim(x);
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace kaz
