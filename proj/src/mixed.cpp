#include "kaz/mixed.hpp"

#include <algorithm>
#include <bit>

#include "kaz/error.hpp"

namespace kaz {

namespace {

constexpr std::size_t kMaxBodies = 20;

void check_bodies(std::span<const RationalPolytope> bodies) {
  for (const auto& b : bodies) {
    if (b.is_empty()) throw UserError("mixed functional of an empty body");
    if (b.ambient_dim() != bodies.front().ambient_dim()) throw UserError("bodies live in different dimensions");
  }
}

}  // namespace

Rational polarize(const PolytopeFunctional& f, std::span<const RationalPolytope> bodies, std::size_t k,
                  Execution exec) {
  if (bodies.size() != k) throw UserError("polarize: expected " + std::to_string(k) + " bodies, got " +
                                          std::to_string(bodies.size()));
  if (k == 0) throw UserError("polarize: degree must be positive");
  if (k > kMaxBodies) throw UserError("polarize: too many bodies");
  check_bodies(bodies);

  const std::size_t subsets = std::size_t{1} << k;
  std::vector<RationalPolytope> sums(subsets);
  // Level by level so that each sum only depends on the previous level.
  std::vector<std::vector<std::size_t>> levels(k + 1);
  for (std::size_t mask = 1; mask < subsets; ++mask)
    levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  for (std::size_t level = 1; level <= k; ++level) {
    const auto& masks = levels[level];
    kernels::for_each(exec, masks.size(), [&](std::size_t i) {
      std::size_t mask = masks[i];
      std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
      std::size_t rest = mask & (mask - 1);
      sums[mask] = rest == 0 ? bodies[low] : minkowski_sum(sums[rest], bodies[low]);
    });
  }
  Rational total = kernels::sum(exec, subsets - 1, [&](std::size_t i) {
    std::size_t mask = i + 1;
    Rational v = f(sums[mask]);
    if ((k - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1) v = -v;
    return v;
  });
  return total / factorial(static_cast<unsigned>(k));
}

Rational mixed_volume(std::span<const RationalPolytope> bodies, Execution exec) {
  if (bodies.empty()) throw UserError("mixed_volume: no bodies");
  if (bodies.size() != bodies.front().ambient_dim())
    throw UserError("mixed_volume: need as many bodies as the ambient dimension");
  // Inner volumes stay serial; the parallelism is across subsets.
  return polarize([](const RationalPolytope& p) { return volume(p, Execution::serial); }, bodies, bodies.size(),
                  exec);
}

Rational mixed_integral(const MultivariatePolynomial& f, std::span<const RationalPolytope> bodies, Execution exec) {
  if (!f.is_homogeneous()) throw UserError("mixed_integral: integrand must be homogeneous");
  if (bodies.empty()) throw UserError("mixed_integral: no bodies");
  if (f.num_vars() != bodies.front().ambient_dim()) throw UserError("mixed_integral: dimension mismatch");
  // The zero polynomial has no degree, so any tuple of at least n bodies fits.
  std::size_t n = f.num_vars();
  std::size_t p = f.is_zero() ? std::max(bodies.size(), n) - n : static_cast<std::size_t>(f.degree());
  if (bodies.size() != n + p)
    throw UserError("mixed_integral: need n + deg(F) = " + std::to_string(f.num_vars() + p) + " bodies");
  return polarize([&](const RationalPolytope& q) { return integrate_over_polytope(f, q, Execution::serial); },
                  bodies, bodies.size(), exec);
}

}  // namespace kaz
