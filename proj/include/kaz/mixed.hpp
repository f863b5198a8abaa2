#pragma once

#include <functional>
#include <span>

#include "kaz/polynomial.hpp"

namespace kaz {

/// A functional on polytopes. Must be safe to call concurrently.
using PolytopeFunctional = std::function<Rational(const RationalPolytope&)>;

/// Finite-difference polarization (1/k!) sum over nonempty S of
/// (-1)^(k-|S|) f(sum of bodies in S). Subset sums are built once per call,
/// each from the sum without its lowest body.
Rational polarize(const PolytopeFunctional& f, std::span<const RationalPolytope> bodies, std::size_t k,
                  Execution exec = Execution::parallel);

/// Needs exactly ambient-dimension many bodies.
Rational mixed_volume(std::span<const RationalPolytope> bodies, Execution exec = Execution::parallel);

/// F homogeneous of degree p, n + p bodies in R^n.
Rational mixed_integral(const MultivariatePolynomial& f, std::span<const RationalPolytope> bodies,
                        Execution exec = Execution::parallel);

}  // namespace kaz
