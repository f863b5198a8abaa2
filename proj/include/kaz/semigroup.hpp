#pragma once

#include "kaz/character.hpp"

namespace kaz {

/// Nonempty finite subset of Z^n, sorted and deduplicated.
struct FiniteSet {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

/// Throws UserError on an empty list or mixed dimensions.
FiniteSet make_finite_set(std::vector<LatticePoint> points);

FiniteSet set_sum(const FiniteSet& a, const FiniteSet& b);
/// A ~ B iff their convex hulls agree.
bool analogous(const FiniteSet& a, const FiniteSet& b);
RationalPolytope hull(const FiniteSet& a);
/// Lattice points of the convex hull.
FiniteSet completion_torus(const FiniteSet& a);
/// Lattice points of the moment polytope; dominant by construction.
WeightSet completion_group(const WeightSet& a);

/// Literal set-enumeration check of A + n D = (n+1) D = D + n D, where
/// kD is the set of lattice points of k * hull(A).
bool verify_prop9(const FiniteSet& a, std::size_t n);

/// With A = W.lambda, B = W.mu and the tensor spectrum as their product:
/// A + B lies in the product, the hulls agree, and the lattice points of each
/// of the three weight polytopes are realized as Spec_W of a direct sum.
bool verify_K0_axioms(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu);

/// Sum over A of F_W(lambda)^2.
Integer dim_LA(const WeightSet& a);

}  // namespace kaz
