#pragma once

#include <vector>

#include "kaz/polynomial.hpp"
#include "kaz/polytope.hpp"
#include "kaz/random.hpp"

namespace kaz::test {

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::vector<RationalVector> points(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> out;
  for (const auto& r : rows) {
    RationalVector v(r.size());
    std::size_t i = 0;
    for (long c : r) v[i++] = c;
    out.push_back(std::move(v));
  }
  return out;
}

inline RationalPolytope hull(std::initializer_list<std::initializer_list<long>> rows) {
  return convex_hull(points(rows));
}

inline std::vector<LatticePoint> random_lattice_set(Rng& rng, std::size_t dim, std::size_t max_points,
                                                    std::int64_t lo, std::int64_t hi) {
  std::size_t count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_points)));
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    LatticePoint p(dim);
    for (std::size_t j = 0; j < dim; ++j) p[j] = rng.uniform(lo, hi);
    out.push_back(p);
  }
  return out;
}

/// Random lattice polytope; retries until it has the requested intrinsic dimension.
inline RationalPolytope random_full_polytope(Rng& rng, std::size_t dim, std::size_t max_points, std::int64_t hi) {
  while (true) {
    auto pts = random_lattice_set(rng, dim, max_points, 0, hi);
    RationalPolytope p = convex_hull(pts);
    if (p.is_full_dimensional()) return p;
  }
}

inline std::size_t count_lattice_points_brute(const RationalPolytope& p, std::int64_t lo, std::int64_t hi) {
  // Independent of lattice_points: every box point tested with contains().
  std::size_t n = p.ambient_dim();
  LatticePoint x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo;
  std::size_t count = 0;
  while (true) {
    if (p.contains(x.to_rational())) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == hi) x[i++] = lo;
    if (i == n) return count;
    ++x[i];
  }
}

inline MultivariatePolynomial random_polynomial(Rng& rng, std::size_t num_vars, int max_degree,
                                               std::size_t num_terms) {
  MultivariatePolynomial f(num_vars);
  for (std::size_t t = 0; t < num_terms; ++t) {
    Exponent e(num_vars, 0);
    int budget = static_cast<int>(rng.uniform(0, max_degree));
    for (int b = 0; b < budget; ++b) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(num_vars) - 1))];
    f.add_term(e, q(rng.uniform(-5, 5), rng.uniform(1, 4)));
  }
  return f;
}

}  // namespace kaz::test
