#include "kaz/gc_newton.hpp"

#include "kaz/error.hpp"

namespace kaz {

namespace {

void require_decreasing(std::size_t n, const RationalVector& lambda) {
  if (lambda.dim() != n) throw UserError("highest weight must have " + std::to_string(n) + " coordinates");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) throw UserError("weights must be dominant");
}

// a <= b as a halfspace in R^dim, either side possibly a constant.
struct Term {
  std::optional<std::size_t> var;
  Rational value;
};

Halfspace less_equal(std::size_t dim, const Term& a, const Term& b) {
  RationalVector normal(dim);
  Rational offset(0);
  if (a.var) normal[*a.var] += 1; else offset -= a.value;
  if (b.var) normal[*b.var] -= 1; else offset += b.value;
  return {normal, offset};
}

std::size_t matrix_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

}  // namespace

std::size_t gc_index(std::size_t n, std::size_t k, std::size_t j) {
  // Rows of length n-1, n-2, ..., n-k+1 precede row k.
  std::size_t before = 0;
  for (std::size_t r = 1; r < k; ++r) before += n - r;
  return before + j;
}

GCPolytope gc_polytope(std::size_t n, const RationalVector& lambda) {
  if (n < 2) throw UserError("Gelfand-Cetlin polytopes need n >= 2");
  require_decreasing(n, lambda);
  const std::size_t dim = n * (n - 1) / 2;
  auto entry = [&](std::size_t k, std::size_t j) -> Term {
    if (k == 0) return {std::nullopt, lambda[j]};
    return {gc_index(n, k, j), Rational(0)};
  };
  std::vector<Halfspace> hs;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < n - k; ++j) {
      hs.push_back(less_equal(dim, entry(k, j), entry(k - 1, j)));
      hs.push_back(less_equal(dim, entry(k - 1, j + 1), entry(k, j)));
    }
  }
  RationalPolytope p = polytope_from_halfspaces(dim, hs);
  return GCPolytope{n, lambda, std::move(hs), std::move(p)};
}

Integer gc_lattice_count(std::size_t n, const LatticePoint& lambda) {
  require_decreasing(n, lambda.to_rational());
  if (n == 1) return 1;
  return static_cast<unsigned long>(lattice_points(gc_polytope(n, lambda.to_rational()).polytope).size());
}

bool check_gc_linearity(std::size_t n, const LatticePoint& lambda, const LatticePoint& gamma, std::int64_t c1,
                        std::int64_t c2) {
  if (c1 < 0 || c2 < 0) throw UserError("linearity coefficients must be nonnegative");
  RationalVector l = lambda.to_rational(), g = gamma.to_rational();
  RationalVector combo = Rational(static_cast<long>(c1)) * l + Rational(static_cast<long>(c2)) * g;
  RationalPolytope lhs = gc_polytope(n, combo).polytope;
  RationalPolytope rhs = minkowski_sum(scale(gc_polytope(n, l).polytope, Rational(static_cast<long>(c1))),
                                       scale(gc_polytope(n, g).polytope, Rational(static_cast<long>(c2))));
  return lhs == rhs;
}

NewtonMatrixPolytope::NewtonMatrixPolytope(std::size_t n, std::vector<Halfspace> inequalities)
    : n_(n), inequalities_(std::move(inequalities)), cache_(std::make_shared<Cache>()) {}

const RationalPolytope& NewtonMatrixPolytope::polytope() const {
  std::call_once(cache_->once, [&] { cache_->value = polytope_from_halfspaces(n_ * n_, inequalities_); });
  return cache_->value;
}

NewtonMatrixPolytope newton_polytope_over(std::size_t n, const RationalPolytope& diagonal) {
  if (n < 1 || n > kMaxNewtonRank)
    throw UserError("GL(" + std::to_string(n) + ") Newton polytope exceeds the desk-scale limit n <= 3");
  if (diagonal.ambient_dim() != n) throw UserError("diagonal polytope has wrong dimension");
  if (diagonal.is_empty()) throw UserError("diagonal polytope is empty");
  const std::size_t dim = n * n;
  auto var = [&](std::size_t i, std::size_t j) -> Term { return {matrix_index(n, i, j), Rational(0)}; };
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) hs.push_back(less_equal(dim, var(i, j + 1), var(i, j)));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hs.push_back(less_equal(dim, var(i + 1, j), var(i, j)));
  for (const auto& f : diagonal.facets()) {
    RationalVector normal(dim);
    for (std::size_t i = 0; i < n; ++i) normal[matrix_index(n, i, i)] = f.normal[i];
    hs.push_back({normal, f.offset});
  }
  return NewtonMatrixPolytope(n, std::move(hs));
}

NewtonMatrixPolytope newton_polytope_gl(const WeightSet& a) {
  const auto& factors = a.root_data->factors();
  if (factors.size() != 1 || factors.front().type != FactorType::gl)
    throw UserError("Newton matrix polytopes are defined for a single GL(n) factor");
  const std::size_t n = factors.front().n;
  if (n > kMaxNewtonRank)
    throw UserError("GL(" + std::to_string(n) + ") Newton polytope exceeds the desk-scale limit n <= 3");
  return newton_polytope_over(n, moment_polytope(a));
}

RationalPolytope newton_fiber(const NewtonMatrixPolytope& p, const RationalVector& lambda) {
  const std::size_t n = p.n();
  if (n < 2) throw UserError("GL(1) has no off-diagonal fiber");
  if (lambda.dim() != n) throw UserError("diagonal has wrong dimension");
  std::vector<Halfspace> hs = p.inequalities();
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e = unit_vector(n * n, matrix_index(n, i, i));
    hs.push_back({e, lambda[i]});
    hs.push_back({-e, -lambda[i]});
  }
  RationalPolytope full = polytope_from_halfspaces(n * n, hs);
  if (full.is_empty()) return RationalPolytope::empty(n * (n - 1));
  const std::size_t half = n * (n - 1) / 2;
  std::vector<std::size_t> coords(2 * half);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < n - k; ++j) {
      coords[gc_index(n, k, j)] = matrix_index(n, j, j + k);
      coords[half + gc_index(n, k, j)] = matrix_index(n, j + k, j);
    }
  }
  return coordinate_projection(full, coords);
}

RationalPolytope product(const RationalPolytope& a, const RationalPolytope& b) {
  if (a.is_empty() || b.is_empty()) return RationalPolytope::empty(a.ambient_dim() + b.ambient_dim());
  std::vector<RationalVector> pts;
  for (const auto& x : a.vertices()) {
    for (const auto& y : b.vertices()) {
      std::vector<Rational> c(x.begin(), x.end());
      c.insert(c.end(), y.begin(), y.end());
      pts.emplace_back(std::move(c));
    }
  }
  return convex_hull(std::move(pts));
}

bool check_fiber_product(const NewtonMatrixPolytope& p, const RationalVector& lambda) {
  RationalPolytope gc = gc_polytope(p.n(), lambda).polytope;
  return newton_fiber(p, lambda) == product(gc, gc);
}

}  // namespace kaz
