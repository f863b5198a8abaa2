#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "kaz/root_data.hpp"

namespace kaz {

/// Gelfand-Cetlin polytope of GL(n), n >= 2, in R^(n(n-1)/2).
///
/// Coordinates list the pattern rows from length n-1 down to length 1; entry
/// j of the row of length n-k sits at index offset(k) + j.
struct GCPolytope {
  std::size_t n = 0;
  RationalVector lambda;
  std::vector<Halfspace> inequalities;
  RationalPolytope polytope;
};

/// Index of entry j in the pattern row of length n - k, k = 1..n-1.
std::size_t gc_index(std::size_t n, std::size_t k, std::size_t j);

/// Throws UserError unless lambda is weakly decreasing of length n >= 2.
GCPolytope gc_polytope(std::size_t n, const RationalVector& lambda);

/// Number of integral patterns; 1 for n = 1.
Integer gc_lattice_count(std::size_t n, const LatticePoint& lambda);

/// gc(c1 lambda + c2 gamma) == c1 gc(lambda) + c2 gc(gamma).
bool check_gc_linearity(std::size_t n, const LatticePoint& lambda, const LatticePoint& gamma, std::int64_t c1,
                        std::int64_t c2);

/// Polytope of n x n matrices (row-major in R^(n^2)) with weakly decreasing
/// rows and columns whose diagonal lies in a given polytope of R^n.
/// Stored by its inequalities; vertices are enumerated on first use.
class NewtonMatrixPolytope {
 public:
  NewtonMatrixPolytope(std::size_t n, std::vector<Halfspace> inequalities);

  std::size_t n() const { return n_; }
  const std::vector<Halfspace>& inequalities() const { return inequalities_; }
  /// Thread-safe; computed once.
  const RationalPolytope& polytope() const;

 private:
  std::size_t n_;
  std::vector<Halfspace> inequalities_;
  struct Cache {
    std::once_flag once;
    RationalPolytope value;
  };
  std::shared_ptr<Cache> cache_;
};

inline constexpr std::size_t kMaxNewtonRank = 3;

/// Matrix polytope over an arbitrary diagonal polytope in R^n.
NewtonMatrixPolytope newton_polytope_over(std::size_t n, const RationalPolytope& diagonal);
/// Matrix polytope over the moment polytope of A; A must be a dominant set for
/// a single GL(n) factor with n <= 3.
NewtonMatrixPolytope newton_polytope_gl(const WeightSet& a);

/// Off-diagonal coordinates of the fiber over diag(M) = lambda, ordered as the
/// upper-triangular pattern followed by the lower-triangular pattern, both in
/// gc_index order. For n = 1 this throws.
RationalPolytope newton_fiber(const NewtonMatrixPolytope& p, const RationalVector& lambda);

/// Product of polytopes with concatenated coordinates.
RationalPolytope product(const RationalPolytope& a, const RationalPolytope& b);

/// The fiber equals gc(lambda) x gc(lambda).
bool check_fiber_product(const NewtonMatrixPolytope& p, const RationalVector& lambda);

}  // namespace kaz
