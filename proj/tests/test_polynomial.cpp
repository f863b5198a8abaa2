#include <algorithm>

#include "doctest.h"
#include "kaz/error.hpp"
#include "kaz/polynomial.hpp"
#include "support.hpp"

using namespace kaz;
using kaz::test::hull;
using kaz::test::points;
using kaz::test::q;

namespace {

MultivariatePolynomial x(std::size_t n, std::size_t i) { return MultivariatePolynomial::variable(n, i); }
MultivariatePolynomial c(std::size_t n, const Rational& v) { return MultivariatePolynomial::constant(n, v); }

// Integral over a convex polygon by Green's theorem: the monomial x^i y^j is
// the divergence-free partner of x^(i+1) y^j / (i+1) dy along the boundary.
// Each edge is parametrised linearly and the univariate integrand expanded.
Rational green_integral(const MultivariatePolynomial& f, const RationalPolytope& p) {
  std::vector<RationalVector> v = p.vertices();
  RationalVector centre(2);
  for (const auto& w : v) centre = centre + w;
  centre *= Rational(1, static_cast<long>(v.size()));
  auto half = [&](const RationalVector& w) {
    RationalVector d = w - centre;
    return d[1] > 0 || (d[1] == 0 && d[0] > 0) ? 0 : 1;
  };
  std::sort(v.begin(), v.end(), [&](const RationalVector& a, const RationalVector& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    RationalVector da = a - centre, db = b - centre;
    return da[0] * db[1] - da[1] * db[0] > 0;
  });
  Rational total(0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const RationalVector& a = v[k];
    const RationalVector& b = v[(k + 1) % v.size()];
    Rational dx = b[0] - a[0], dy = b[1] - a[1];
    // Polynomial in t via compose_linear with one variable.
    std::vector<LinearForm> images{{RationalVector{dx}, a[0]}, {RationalVector{dy}, a[1]}};
    for (const auto& [e, coeff] : f.terms()) {
      MultivariatePolynomial mono(2);
      mono.add_term({e[0] + 1, e[1]}, coeff / (e[0] + 1));
      MultivariatePolynomial g = compose_linear(mono, images, 1);
      for (const auto& [te, tc] : g.terms()) total += tc * dy / (te[0] + 1);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("polynomial arithmetic and queries") {
  auto p = x(2, 0) * x(2, 1) + c(2, 3);
  CHECK(p.degree() == 2);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.evaluate(RationalVector{q(1, 2), 4}) == 5);
  CHECK((p - p).is_zero());
  CHECK(MultivariatePolynomial(2).degree() == -1);
  CHECK((Rational(0) * p).is_zero());
  CHECK(pow(x(1, 0) + c(1, 1), 2) == x(1, 0) * x(1, 0) + Rational(2) * x(1, 0) + c(1, 1));
  CHECK_THROWS_AS(x(1, 0) + x(2, 0), UserError);
  CHECK_THROWS_AS(p.evaluate(RationalVector{1}), UserError);
}

TEST_CASE("product_of_linear_forms") {
  CHECK(product_of_linear_forms(3, {}) == c(3, 1));
  std::vector<LinearForm> gl2{{RationalVector{1, -1}, 1}};
  auto fw = product_of_linear_forms(2, gl2);
  CHECK(fw == x(2, 0) - x(2, 1) + c(2, 1));
  // Dimension of the GL(2) irreducible with highest weight (a, b) is a - b + 1.
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= a; ++b) CHECK(fw.evaluate(RationalVector{a, b}) == a - b + 1);
  std::vector<LinearForm> sq{{RationalVector{1}, 1}, {RationalVector{1}, 1}};
  CHECK(product_of_linear_forms(1, sq) == x(1, 0) * x(1, 0) + Rational(2) * x(1, 0) + c(1, 1));
  std::vector<LinearForm> wrong{{RationalVector{1}, 0}};
  CHECK_THROWS_AS(product_of_linear_forms(2, wrong), UserError);
}

TEST_CASE("homogeneous_top") {
  CHECK(homogeneous_top(x(1, 0) + c(1, 1)) == x(1, 0));
  auto h = x(2, 0) * x(2, 1);
  CHECK(homogeneous_top(h) == h);
  auto d = x(2, 0) - x(2, 1);
  CHECK(homogeneous_top(pow(d + c(2, 1), 2)) == d * d);
  CHECK_THROWS_AS(homogeneous_top(MultivariatePolynomial(2)), UserError);
}

TEST_CASE("integrate_over_simplex examples") {
  CHECK(integrate_over_simplex(x(1, 0), Simplex(points({{0}, {1}}))) == q(1, 2));
  Simplex tri(points({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(integrate_over_simplex(c(2, 1), tri) == q(1, 2));
  CHECK(integrate_over_simplex(x(2, 0), tri) == q(1, 6));
  // x*y over the standard triangle is 1/24.
  CHECK(integrate_over_simplex(x(2, 0) * x(2, 1), tri) == q(1, 24));
  CHECK_THROWS_AS(Simplex(points({{0, 0}, {1, 1}, {2, 2}})), UserError);
  CHECK_THROWS_AS(integrate_over_simplex(x(1, 0), tri), UserError);
}

TEST_CASE("integrate_over_simplex on a lower-dimensional cell uses its own lattice measure") {
  // The segment (0,0)-(2,2) has relative lattice length 2; x averages to 1.
  Simplex seg(points({{0, 0}, {2, 2}}));
  CHECK(integrate_over_simplex(c(2, 1), seg) == 2);
  CHECK(integrate_over_simplex(x(2, 0), seg) == 2);
}

TEST_CASE("integrate_over_polytope examples") {
  auto sq = hull({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}});
  CHECK(integrate_over_polytope(x(2, 0) * x(2, 0), sq) == q(4, 3));
  CHECK(integrate_over_polytope(c(2, 1), sq) == volume(sq));
  for (int d = 0; d <= 5; ++d) {
    auto seg = hull({{0}, {d}});
    CHECK(integrate_over_polytope(x(1, 0) * x(1, 0), seg) == q(d * d * d, 3));
  }
  CHECK(integrate_over_polytope(c(2, 1), hull({{0, 0}, {1, 1}})) == 0);
  CHECK_THROWS_AS(integrate_over_polytope(c(1, 1), sq), UserError);
}

TEST_CASE("integration agrees with a Green's theorem oracle on random polygons") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = test::random_full_polytope(rng, 2, 7, 6);
    auto f = test::random_polynomial(rng, 2, 3, 4);
    CHECK(integrate_over_polytope(f, p, Execution::serial) == green_integral(f, p));
    CHECK(integrate_over_polytope(f, p, Execution::parallel) == green_integral(f, p));
  }
}

TEST_CASE("integration is linear") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = test::random_full_polytope(rng, 2, 6, 5);
    auto f = test::random_polynomial(rng, 2, 3, 4);
    auto g = test::random_polynomial(rng, 2, 3, 4);
    Rational a = q(rng.uniform(-4, 4), 3), b = q(rng.uniform(-4, 4), 5);
    CHECK(integrate_over_polytope(a * f + b * g, p) ==
          a * integrate_over_polytope(f, p) + b * integrate_over_polytope(g, p));
  }
}

TEST_CASE("integration does not depend on the triangulation") {
  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    auto p = test::random_full_polytope(rng, 3, 8, 4);
    auto f = test::random_polynomial(rng, 3, 3, 5);
    // Reflecting x -> -x maps P to a polytope whose vertex order (and hence
    // coning vertex) differs; pulling f back along the reflection must agree.
    std::vector<RationalVector> flipped;
    for (const auto& v : p.vertices()) flipped.push_back(RationalVector{-v[0], -v[1], -v[2]});
    auto pf = convex_hull(flipped);
    std::vector<LinearForm> neg{{RationalVector{-1, 0, 0}, 0}, {RationalVector{0, -1, 0}, 0},
                                {RationalVector{0, 0, -1}, 0}};
    auto ff = compose_linear(f, neg, 3);
    CHECK(integrate_over_polytope(ff, pf) == integrate_over_polytope(f, p));
    // And a direct sum over an alternative triangulation: cone from the last vertex.
    Rational alt(0);
    const auto& verts = p.vertices();
    std::size_t apex = verts.size() - 1;
    for (std::size_t fi = 0; fi < p.proper_facets().size(); ++fi) {
      const auto& on = p.facet_vertices()[fi];
      if (std::find(on.begin(), on.end(), apex) != on.end()) continue;
      std::vector<RationalVector> fv;
      for (std::size_t idx : on) fv.push_back(verts[idx]);
      for (const auto& cell : triangulate(convex_hull(fv))) {
        auto cv = cell.vertices();
        cv.push_back(verts[apex]);
        alt += integrate_over_simplex(f, Simplex(cv));
      }
    }
    CHECK(alt == integrate_over_polytope(f, p));
  }
}

TEST_CASE("integration scales as k^(n+p) for homogeneous integrands") {
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = test::random_full_polytope(rng, 2, 6, 5);
    auto f = homogeneous_top(test::random_polynomial(rng, 2, 3, 4) + pow(x(2, 0), 3));
    int deg = f.degree();
    Rational base = integrate_over_polytope(f, p);
    for (int k = 1; k <= 3; ++k)
      CHECK(integrate_over_polytope(f, scale(p, k)) == power(Rational(k), static_cast<unsigned>(2 + deg)) * base);
  }
}
