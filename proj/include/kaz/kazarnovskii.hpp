#pragma once

#include <map>
#include <span>
#include <string>

#include "kaz/gc_newton.hpp"
#include "kaz/mixed.hpp"
#include "kaz/semigroup.hpp"

namespace kaz {

enum class IndexFormula { weight_polytope, moment_polytope, newton_mixed_volume };
std::string to_string(IndexFormula f);

struct IntersectionIndexResult {
  Rational value;
  IndexFormula formula_used = IndexFormula::weight_polytope;
  /// Mixed integral of phi_W^2 before the combinatorial constant.
  Rational intermediate;
  /// The other form's mixed integral, kept for reporting.
  Rational moment_intermediate;
};

/// Intersection index of m = dim G weight sets: (m!/#W) I phi^2 over weight
/// polytopes, checked against m! I phi^2 over moment polytopes. Throws
/// InvariantViolation("formula inconsistency") if the forms differ, the value
/// is negative or not an integer, or a torus value differs from bk_count.
IntersectionIndexResult kazarnovskii_index(const RootSystemData& rd, std::span<const WeightSet> sets,
                                           Execution exec = Execution::parallel);

/// n! times the mixed volume of the convex hulls of n sets in Z^n.
Integer bk_count(std::span<const FiniteSet> sets, Execution exec = Execution::parallel);

struct HilbertSample {
  std::int64_t k = 0;
  /// Sum of F_W(lambda)^2 over lattice points of k times the moment polytope.
  Integer value;
  /// m! H(k) / k^m.
  Rational normalized;
};

HilbertSample hilbert_function(const RootSystemData& rd, const WeightSet& a, std::int64_t k);

struct HilbertAsymptotics {
  std::vector<HilbertSample> samples;
  /// Index of (A, ..., A).
  Rational target;
  /// |normalized - target| / target at the last k (absolute deviation if target is 0).
  Rational final_deviation;
  double final_relative_deviation = 0;
};

/// Throws UserError unless the schedule is strictly increasing and positive.
HilbertAsymptotics hilbert_asymptotic_check(const RootSystemData& rd, const WeightSet& a,
                                            std::span<const std::int64_t> k_schedule);

/// Bivariate Laurent polynomial: exponent -> nonzero integer coefficient.
using LaurentPolynomial2 = std::map<LatticePoint, Integer>;

/// Number of common roots in (C*)^2, with multiplicity, from Sylvester
/// resultants in both elimination orders. Throws NonGenericInput when a
/// resultant vanishes identically, an initial system has a root in a
/// one-dimensional torus, or the two orders disagree.
Integer resultant_root_count_2d(const LaurentPolynomial2& f, const LaurentPolynomial2& g);

struct GlCrosscheck {
  Rational via_mixed_integral;
  Rational via_newton_volume;
};

inline constexpr std::size_t kCrosscheckRank = 2;

/// Both GL(2) index formulas on four weight sets; InvariantViolation if they differ.
GlCrosscheck kaz_gl_crosscheck(std::span<const WeightSet> sets, Execution exec = Execution::parallel);

}  // namespace kaz
