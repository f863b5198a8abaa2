#include <algorithm>

#include "doctest.h"
#include "gc_oracle.hpp"
#include "kaz/error.hpp"
#include "kaz/root_data.hpp"
#include "support.hpp"

using namespace kaz;
using kaz::test::q;

namespace {

RootData sl(std::size_t n) { return RootSystemData::make({{FactorType::sl, n}}); }
RootData gl(std::size_t n) { return RootSystemData::make({{FactorType::gl, n}}); }
RootData torus(std::size_t n) { return RootSystemData::make({{FactorType::torus, n}}); }

std::vector<LatticePoint> lp(std::initializer_list<LatticePoint> l) { return l; }

// Random dominant weight with coordinate spread at most `spread`.
LatticePoint random_dominant(Rng& rng, const RootSystemData& rd, std::int64_t spread) {
  LatticePoint x(rd.rank());
  for (std::size_t i = 0; i < x.dim(); ++i) x[i] = rng.uniform(-spread, spread);
  return dominant_representative(rd, x);
}

// Dimension by GC pattern count, factor by factor.
std::int64_t gc_dimension(const RootSystemData& rd, const LatticePoint& lambda) {
  std::int64_t d = 1;
  for (std::size_t f = 0; f < rd.factors().size(); ++f) {
    const Factor& fac = rd.factors()[f];
    std::size_t off = rd.offsets()[f];
    if (fac.type == FactorType::torus) continue;
    std::size_t len = fac.type == FactorType::gl ? fac.n : fac.n - 1;
    std::vector<std::int64_t> block(lambda.coords().begin() + off, lambda.coords().begin() + off + len);
    d *= fac.type == FactorType::gl ? test::gc_count(block) : test::gc_count(test::sl_to_partition(LatticePoint(block)));
  }
  return d;
}

}  // namespace

TEST_CASE("root data sizes") {
  CHECK(sl(2)->rank() == 1);
  CHECK(sl(2)->group_dim() == 3);
  CHECK(gl(3)->group_dim() == 9);
  CHECK(sl(3)->group_dim() == 8);
  CHECK(torus(2)->group_dim() == 2);
  CHECK(gl(3)->weyl_order() == 6);
  auto prod = RootSystemData::make({{FactorType::gl, 2}, {FactorType::sl, 3}, {FactorType::torus, 1}});
  CHECK(prod->rank() == 5);
  CHECK(prod->group_dim() == 4 + 8 + 1);
  CHECK(prod->weyl_order() == 12);
  CHECK(prod->positive_roots().size() * 2 == prod->group_dim() - prod->rank());
  CHECK_THROWS_AS(RootSystemData::make({}), UserError);
  CHECK_THROWS_AS(RootSystemData::make({{FactorType::sl, 1}}), UserError);
  CHECK_THROWS_AS(RootSystemData::make({{FactorType::gl, 0}}), UserError);
}

TEST_CASE("the invariant form is W-invariant and roots have squared length 2") {
  for (auto rd : {sl(2), sl(3), sl(4), gl(2), gl(3)}) {
    for (const auto& a : rd->positive_roots()) CHECK(rd->form(a.root, a.root) == 2);
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
      LatticePoint x(rd->rank()), y(rd->rank());
      for (std::size_t i = 0; i < x.dim(); ++i) {
        x[i] = rng.uniform(-4, 4);
        y[i] = rng.uniform(-4, 4);
      }
      for (std::size_t s = 0; s < rd->simple_roots().size(); ++s)
        CHECK(rd->form(rd->reflect(x, s), rd->reflect(y, s)) == rd->form(x, y));
    }
  }
}

TEST_CASE("weyl_orbit examples") {
  for (std::int64_t d = 1; d <= 4; ++d) CHECK(weyl_orbit(*sl(2), {d}) == lp({{-d}, {d}}));
  CHECK(weyl_orbit(*gl(2), {3, 1}) == lp({{1, 3}, {3, 1}}));
  CHECK(weyl_orbit(*torus(2), {3, -1}) == lp({{3, -1}}));
  CHECK(weyl_orbit(*gl(3), {2, 1, 0}).size() == 6);
  CHECK(weyl_orbit(*gl(3), {1, 1, 0}).size() == 3);
  // SL(3) adjoint weight (1,1): the six roots.
  CHECK(weyl_orbit(*sl(3), {1, 1}).size() == 6);
}

TEST_CASE("orbit sizes divide the Weyl group order and each orbit meets the chamber once") {
  Rng rng(32);
  for (auto rd : {sl(3), gl(3), sl(4), RootSystemData::make({{FactorType::gl, 2}, {FactorType::sl, 2}})}) {
    for (int t = 0; t < 15; ++t) {
      LatticePoint x(rd->rank());
      for (std::size_t i = 0; i < x.dim(); ++i) x[i] = rng.uniform(-3, 3);
      auto orbit = weyl_orbit(*rd, x);
      CHECK(rd->weyl_order() % orbit.size() == 0);
      auto dominant = std::count_if(orbit.begin(), orbit.end(), [&](const auto& p) { return rd->is_dominant(p); });
      CHECK(dominant == 1);
      CHECK(rd->is_dominant(dominant_representative(*rd, x)));
      CHECK(std::binary_search(orbit.begin(), orbit.end(), dominant_representative(*rd, x)));
    }
  }
}

TEST_CASE("dominant_representative examples") {
  CHECK(dominant_representative(*gl(2), {1, 3}) == LatticePoint{3, 1});
  CHECK(dominant_representative(*sl(2), {-5}) == LatticePoint{5});
  CHECK(dominant_representative(*gl(3), {4, 2, 2}) == LatticePoint{4, 2, 2});
  CHECK(dominant_representative(*gl(3), {0, 5, -1}) == LatticePoint{5, 0, -1});
}

TEST_CASE("Weyl dimension polynomial examples") {
  auto x = MultivariatePolynomial::variable(1, 0);
  CHECK(weyl_dim_polynomial(*sl(2)) == x + MultivariatePolynomial::constant(1, 1));
  auto a = MultivariatePolynomial::variable(2, 0), b = MultivariatePolynomial::variable(2, 1);
  CHECK(weyl_dim_polynomial(*gl(2)) == a - b + MultivariatePolynomial::constant(2, 1));
  CHECK(weyl_dim_polynomial(*gl(3)).evaluate(RationalVector{2, 1, 0}) == 8);
  CHECK(weyl_dim_polynomial(*torus(3)) == MultivariatePolynomial::constant(3, 1));
  for (auto rd : {sl(2), sl(3), gl(3), sl(4)}) {
    CHECK(weyl_dim_polynomial(*rd).degree() == static_cast<int>((rd->group_dim() - rd->rank()) / 2));
    CHECK(weyl_dim_polynomial(*rd).evaluate(RationalVector(rd->rank())) == 1);
  }
}

TEST_CASE("Weyl dimension matches Gelfand-Cetlin counts") {
  Rng rng(33);
  for (auto rd : {sl(2), gl(2), sl(3), gl(3), sl(4), RootSystemData::make({{FactorType::gl, 2}, {FactorType::sl, 3}})}) {
    auto fw = weyl_dim_polynomial(*rd);
    for (int t = 0; t < 15; ++t) {
      LatticePoint lambda = random_dominant(rng, *rd, 5);
      Rational d = fw.evaluate(lambda.to_rational());
      CHECK(d >= 1);
      CHECK(d == gc_dimension(*rd, lambda));
    }
  }
}

TEST_CASE("phi_W examples") {
  CHECK(phi_W(*sl(2)) == MultivariatePolynomial::variable(1, 0));
  CHECK(phi_W(*torus(2)) == MultivariatePolynomial::constant(2, 1));
  auto a = MultivariatePolynomial::variable(2, 0), b = MultivariatePolynomial::variable(2, 1);
  CHECK(phi_W(*gl(2)) == a - b);
}

TEST_CASE("phi_W changes sign under simple reflections and its square is invariant") {
  Rng rng(34);
  for (auto rd : {sl(3), gl(3), sl(4)}) {
    auto phi = phi_W(*rd);
    for (int t = 0; t < 10; ++t) {
      RationalVector x(rd->rank());
      for (std::size_t i = 0; i < x.dim(); ++i) x[i] = q(rng.uniform(-9, 9), rng.uniform(1, 3));
      for (std::size_t s = 0; s < rd->simple_roots().size(); ++s)
        CHECK(phi.evaluate(rd->reflect(x, s)) == -phi.evaluate(x));
    }
  }
}

TEST_CASE("weight_polytope and moment_polytope examples") {
  auto s2 = sl(2);
  for (std::int64_t d = 1; d <= 3; ++d) CHECK(weight_polytope(make_weight_set(s2, {{d}})) == test::hull({{-d}, {d}}));
  CHECK(moment_polytope(make_weight_set(s2, {{2}})) == test::hull({{0}, {2}}));
  auto t = torus(2);
  auto ta = make_weight_set(t, {{0, 0}, {2, 1}, {-1, 3}});
  CHECK(weight_polytope(ta) == test::hull({{0, 0}, {2, 1}, {-1, 3}}));
  CHECK(moment_polytope(ta) == weight_polytope(ta));
  auto g2 = gl(2);
  auto ga = make_weight_set(g2, {{1, 0}});
  CHECK(weight_polytope(ga) == test::hull({{1, 0}, {0, 1}}));
  auto mp = moment_polytope(ga);
  CHECK(mp.vertices() == std::vector<RationalVector>{RationalVector{q(1, 2), q(1, 2)}, RationalVector{1, 0}});
  CHECK_THROWS_WITH_AS(make_weight_set(g2, {{0, 1}}), "weights must be dominant", UserError);
  CHECK_THROWS_AS(weight_polytope(make_weight_set(g2, {{0, 1}}, false)), UserError);
  CHECK_THROWS_AS(make_weight_set(g2, {}), UserError);
  CHECK_THROWS_AS(make_weight_set(g2, {{1}}), UserError);
}

TEST_CASE("weight polytopes are W-invariant and moment polytopes contain A") {
  Rng rng(35);
  for (auto rd : {sl(3), gl(3), RootSystemData::make({{FactorType::gl, 2}, {FactorType::torus, 1}})}) {
    for (int t = 0; t < 5; ++t) {
      std::vector<LatticePoint> pts;
      for (int k = 0; k < 3; ++k) pts.push_back(random_dominant(rng, *rd, 3));
      auto a = make_weight_set(rd, pts);
      auto p = weight_polytope(a);
      for (std::size_t s = 0; s < rd->simple_roots().size(); ++s) {
        std::vector<RationalVector> moved;
        for (const auto& v : p.vertices()) moved.push_back(rd->reflect(v, s));
        CHECK(convex_hull(moved) == p);
      }
      auto m = moment_polytope(a);
      for (const auto& x : a.points) CHECK(m.contains(x.to_rational()));
      for (const auto& v : m.vertices()) CHECK(rd->is_dominant(v));
    }
  }
}

TEST_CASE("orbit identity for the integral of phi squared") {
  // (1/#W) * integral over the weight polytope = integral over the moment polytope.
  Rng rng(36);
  std::vector<std::pair<RootData, std::vector<LatticePoint>>> cases{
      {sl(2), {{3}}},
      {sl(2), {{1}, {4}}},
      {gl(2), {{1, 0}}},
      {gl(2), {{0, 0}, {1, 0}}},
      {gl(2), {{3, 1}, {2, 2}, {4, -1}}},
  };
  for (int t = 0; t < 4; ++t) {
    std::vector<LatticePoint> pts;
    for (int k = 0; k < 3; ++k) pts.push_back(random_dominant(rng, *gl(2), 4));
    cases.push_back({gl(2), pts});
  }
  for (const auto& [rd, pts] : cases) {
    auto a = make_weight_set(rd, pts);
    auto phi = phi_W(*rd);
    auto phi2 = phi * phi;
    auto full = integrate_over_polytope(phi2, weight_polytope(a));
    auto half = integrate_over_polytope(phi2, moment_polytope(a));
    CHECK(full / static_cast<long>(rd->weyl_order()) == half);
  }
  // SL(3) as well, where the moment polytope has rational vertices.
  auto a = make_weight_set(sl(3), {{2, 1}, {0, 3}});
  auto phi = phi_W(*sl(3));
  CHECK(integrate_over_polytope(phi * phi, weight_polytope(a)) / 6 ==
        integrate_over_polytope(phi * phi, moment_polytope(a)));
}
