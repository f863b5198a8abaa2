#include "kaz/semigroup.hpp"

#include <algorithm>
#include <set>

#include "kaz/error.hpp"

namespace kaz {

namespace {

void require_same_dim(const FiniteSet& a, const FiniteSet& b) {
  if (a.dim != b.dim) throw UserError("finite sets live in different dimensions");
}

FiniteSet lattice_set(const RationalPolytope& p) { return make_finite_set(lattice_points(p)); }

// The W-invariant set S is Spec_W of the direct sum of V_nu over its dominant part.
bool realizable(RootData rd, const std::vector<LatticePoint>& s) {
  SpectrumSet direct_sum{rd, {}};
  for (const auto& p : s)
    if (rd->is_dominant(p)) direct_sum.dominant_weights[p] = 1;
  return spec_W(direct_sum).points == s;
}

}  // namespace

FiniteSet make_finite_set(std::vector<LatticePoint> points) {
  if (points.empty()) throw UserError("finite set must be nonempty");
  const std::size_t dim = points.front().dim();
  if (dim == 0) throw UserError("finite set must live in dimension >= 1");
  for (const auto& p : points)
    if (p.dim() != dim) throw UserError("finite set mixes dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return FiniteSet{dim, std::move(points)};
}

FiniteSet set_sum(const FiniteSet& a, const FiniteSet& b) {
  require_same_dim(a, b);
  std::set<LatticePoint> out;
  for (const auto& x : a.points)
    for (const auto& y : b.points) out.insert(x + y);
  return FiniteSet{a.dim, {out.begin(), out.end()}};
}

RationalPolytope hull(const FiniteSet& a) { return convex_hull(a.points); }

bool analogous(const FiniteSet& a, const FiniteSet& b) {
  require_same_dim(a, b);
  return hull(a) == hull(b);
}

FiniteSet completion_torus(const FiniteSet& a) { return lattice_set(hull(a)); }

WeightSet completion_group(const WeightSet& a) {
  return make_weight_set(a.root_data, lattice_points(moment_polytope(a)), true);
}

bool verify_prop9(const FiniteSet& a, std::size_t n) {
  RationalPolytope delta = hull(a);
  FiniteSet d = lattice_set(delta);
  FiniteSet nd = lattice_set(scale(delta, Rational(static_cast<long>(n))));
  FiniteSet n1d = lattice_set(scale(delta, Rational(static_cast<long>(n + 1))));
  return set_sum(a, nd) == n1d && set_sum(d, nd) == n1d;
}

bool verify_K0_axioms(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu) {
  RootData shared = RootSystemData::make(rd.factors());
  FiniteSet a = make_finite_set(weyl_orbit(rd, lambda));
  FiniteSet b = make_finite_set(weyl_orbit(rd, mu));
  FiniteSet product = make_finite_set(spec_W(tensor_spectrum(rd, lambda, mu)).points);

  FiniteSet sum = set_sum(a, b);
  bool axiom2 = std::includes(product.points.begin(), product.points.end(), sum.points.begin(), sum.points.end());
  bool axiom3 = hull(product) == hull(sum);
  bool axiom1 = realizable(shared, completion_torus(a).points) && realizable(shared, completion_torus(b).points) &&
                realizable(shared, completion_torus(product).points);
  return axiom1 && axiom2 && axiom3;
}

Integer dim_LA(const WeightSet& a) {
  MultivariatePolynomial fw = weyl_dim_polynomial(*a.root_data);
  Integer total(0);
  for (const auto& p : a.points) {
    Rational d = fw.evaluate(p.to_rational());
    if (!is_integer(d)) throw InvariantViolation("Weyl dimension is not an integer");
    total += d.get_num() * d.get_num();
  }
  return total;
}

}  // namespace kaz
