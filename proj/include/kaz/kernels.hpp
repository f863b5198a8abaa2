#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kaz/linalg.hpp"

namespace kaz {

/// Selects the OpenMP kernels or their serial reference versions. Both produce
/// identical results; terms are always combined in index order.
enum class Execution { serial, parallel };

namespace kernels {

/// Integer halfspace <normal, x> <= bound, used by the lattice scan.
struct IntHalfspace {
  IntVector normal;
  Integer bound;
};

using IndexTask = std::function<void(std::size_t)>;
using RationalTerm = std::function<Rational(std::size_t)>;

namespace serial {
void for_each(std::size_t count, const IndexTask& task);
Rational sum(std::size_t count, const RationalTerm& term);
std::vector<LatticePoint> scan_box(const LatticePoint& lo, const LatticePoint& hi,
                                   const std::vector<IntHalfspace>& constraints);
}  // namespace serial

namespace parallel {
void for_each(std::size_t count, const IndexTask& task);
Rational sum(std::size_t count, const RationalTerm& term);
std::vector<LatticePoint> scan_box(const LatticePoint& lo, const LatticePoint& hi,
                                   const std::vector<IntHalfspace>& constraints);
}  // namespace parallel

void for_each(Execution exec, std::size_t count, const IndexTask& task);
Rational sum(Execution exec, std::size_t count, const RationalTerm& term);

/// Integer points of the box [lo, hi] satisfying every constraint, in
/// lexicographic order.
std::vector<LatticePoint> scan_box(Execution exec, const LatticePoint& lo, const LatticePoint& hi,
                                   const std::vector<IntHalfspace>& constraints);

namespace detail {

// Shared by both scan implementations: tests one point.
class PointTester {
 public:
  explicit PointTester(const std::vector<IntHalfspace>& constraints, const LatticePoint& lo,
                       const LatticePoint& hi);
  bool contains(const LatticePoint& p) const;

 private:
  const std::vector<IntHalfspace>& constraints_;
  bool small_ = false;
  std::vector<std::vector<std::int64_t>> small_normals_;
  std::vector<std::int64_t> small_bounds_;
};

// Enumerates the box slab with first coordinate fixed to `first`.
void scan_slab(std::int64_t first, const LatticePoint& lo, const LatticePoint& hi, const PointTester& tester,
               std::vector<LatticePoint>& out);

}  // namespace detail
}  // namespace kernels
}  // namespace kaz
