#include "kaz/polynomial.hpp"

#include <numeric>

#include "kaz/error.hpp"

namespace kaz {

MultivariatePolynomial MultivariatePolynomial::constant(std::size_t num_vars, const Rational& c) {
  MultivariatePolynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(std::size_t num_vars, std::size_t i) {
  MultivariatePolynomial p(num_vars);
  Exponent e(num_vars, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultivariatePolynomial MultivariatePolynomial::linear(const LinearForm& form) {
  std::size_t n = form.coeffs.dim();
  MultivariatePolynomial p = constant(n, form.constant);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    p.add_term(e, form.coeffs[i]);
  }
  return p;
}

int MultivariatePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultivariatePolynomial::is_homogeneous() const {
  int d = degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

Rational MultivariatePolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultivariatePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) throw UserError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational MultivariatePolynomial::evaluate(const RationalVector& x) const {
  if (x.dim() != num_vars_) throw UserError("evaluation point has wrong dimension");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    total += t;
  }
  return total;
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& other) {
  if (other.num_vars_ != num_vars_) throw UserError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& other) {
  if (other.num_vars_ != num_vars_) throw UserError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw UserError("polynomial variable count mismatch");
  MultivariatePolynomial out(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultivariatePolynomial pow(const MultivariatePolynomial& p, unsigned exponent) {
  MultivariatePolynomial result = MultivariatePolynomial::constant(p.num_vars(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * p;
  return result;
}

std::ostream& operator<<(std::ostream& os, const MultivariatePolynomial& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    os << (first ? "" : " + ") << to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) os << "*x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    first = false;
  }
  return os;
}

MultivariatePolynomial product_of_linear_forms(std::size_t num_vars, std::span<const LinearForm> forms) {
  MultivariatePolynomial out = MultivariatePolynomial::constant(num_vars, Rational(1));
  for (const auto& f : forms) {
    if (f.coeffs.dim() != num_vars) throw UserError("linear form has wrong variable count");
    out = out * MultivariatePolynomial::linear(f);
  }
  return out;
}

MultivariatePolynomial homogeneous_top(const MultivariatePolynomial& f) {
  if (f.is_zero()) throw UserError("homogeneous_top of the zero polynomial");
  int d = f.degree();
  MultivariatePolynomial out(f.num_vars());
  for (const auto& [e, c] : f.terms())
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.add_term(e, c);
  return out;
}

MultivariatePolynomial compose_linear(const MultivariatePolynomial& f, std::span<const LinearForm> images,
                                      std::size_t new_vars) {
  if (images.size() != f.num_vars()) throw UserError("compose_linear: need one image per variable");
  std::vector<std::vector<MultivariatePolynomial>> powers(f.num_vars());
  for (std::size_t j = 0; j < f.num_vars(); ++j) {
    if (images[j].coeffs.dim() != new_vars) throw UserError("compose_linear: image has wrong variable count");
    powers[j].push_back(MultivariatePolynomial::constant(new_vars, Rational(1)));
  }
  auto power_of = [&](std::size_t j, int k) -> const MultivariatePolynomial& {
    while (static_cast<int>(powers[j].size()) <= k)
      powers[j].push_back(powers[j].back() * MultivariatePolynomial::linear(images[j]));
    return powers[j][static_cast<std::size_t>(k)];
  };
  MultivariatePolynomial out(new_vars);
  for (const auto& [e, c] : f.terms()) {
    MultivariatePolynomial t = MultivariatePolynomial::constant(new_vars, c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) t = t * power_of(j, e[j]);
    out += t;
  }
  return out;
}

Rational integrate_over_simplex(const MultivariatePolynomial& f, const Simplex& s) {
  if (f.num_vars() != s.ambient_dim()) throw UserError("integrand and simplex dimensions differ");
  const std::size_t k = s.dim();
  const std::size_t bary = k + 1;
  std::vector<LinearForm> images;
  for (std::size_t j = 0; j < f.num_vars(); ++j) {
    LinearForm form{RationalVector(bary), Rational(0)};
    for (std::size_t i = 0; i < bary; ++i) form.coeffs[i] = s.vertices()[i][j];
    images.push_back(std::move(form));
  }
  MultivariatePolynomial g = compose_linear(f, images, bary);
  Rational sum(0);
  for (const auto& [e, c] : g.terms()) {
    Rational t = c;
    int total = 0;
    for (int a : e) {
      t *= factorial(static_cast<unsigned>(a));
      total += a;
    }
    sum += t / factorial(static_cast<unsigned>(total) + static_cast<unsigned>(k));
  }
  return simplex_volume(s) * factorial(static_cast<unsigned>(k)) * sum;
}

Rational integrate_over_polytope(const MultivariatePolynomial& f, const RationalPolytope& p, Execution exec) {
  if (f.num_vars() != p.ambient_dim()) throw UserError("integrand and polytope dimensions differ");
  if (!p.is_full_dimensional()) return Rational(0);
  std::vector<Simplex> cells = triangulate(p);
  return kernels::sum(exec, cells.size(), [&](std::size_t i) { return integrate_over_simplex(f, cells[i]); });
}

}  // namespace kaz
