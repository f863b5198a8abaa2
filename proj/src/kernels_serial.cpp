#include <limits>

#include "kaz/kernels.hpp"

namespace kaz::kernels {

namespace detail {

PointTester::PointTester(const std::vector<IntHalfspace>& constraints, const LatticePoint& lo,
                         const LatticePoint& hi)
    : constraints_(constraints) {
  constexpr std::int64_t limit = std::int64_t{1} << 30;
  small_ = true;
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (lo[i] < -limit || hi[i] > limit) small_ = false;
  for (const auto& h : constraints) {
    if (!small_) break;
    std::vector<std::int64_t> normal;
    for (const auto& c : h.normal) {
      if (abs(c) > limit) {
        small_ = false;
        break;
      }
      normal.push_back(c.get_si());
    }
    if (!mpz_fits_slong_p(h.bound.get_mpz_t())) small_ = false;
    if (!small_) break;
    small_normals_.push_back(std::move(normal));
    small_bounds_.push_back(h.bound.get_si());
  }
}

bool PointTester::contains(const LatticePoint& p) const {
  if (small_) {
    for (std::size_t h = 0; h < small_normals_.size(); ++h) {
      __int128 s = 0;
      const auto& a = small_normals_[h];
      for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * p[i];
      if (s > small_bounds_[h]) return false;
    }
    return true;
  }
  Integer s;
  for (const auto& h : constraints_) {
    s = 0;
    for (std::size_t i = 0; i < h.normal.size(); ++i) s += h.normal[i] * Integer(static_cast<long>(p[i]));
    if (s > h.bound) return false;
  }
  return true;
}

void scan_slab(std::int64_t first, const LatticePoint& lo, const LatticePoint& hi, const PointTester& tester,
               std::vector<LatticePoint>& out) {
  std::size_t n = lo.dim();
  LatticePoint p = lo;
  p[0] = first;
  while (true) {
    if (tester.contains(p)) out.push_back(p);
    std::size_t i = n;
    while (i > 1) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = lo[i];
      if (i == 1) return;
    }
    if (n == 1) return;
  }
}

}  // namespace detail

namespace serial {

void for_each(std::size_t count, const IndexTask& task) {
  for (std::size_t i = 0; i < count; ++i) task(i);
}

Rational sum(std::size_t count, const RationalTerm& term) {
  Rational total(0);
  for (std::size_t i = 0; i < count; ++i) total += term(i);
  return total;
}

std::vector<LatticePoint> scan_box(const LatticePoint& lo, const LatticePoint& hi,
                                   const std::vector<IntHalfspace>& constraints) {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (lo[i] > hi[i]) return out;
  detail::PointTester tester(constraints, lo, hi);
  for (std::int64_t x = lo[0]; x <= hi[0]; ++x) detail::scan_slab(x, lo, hi, tester, out);
  return out;
}

}  // namespace serial

void for_each(Execution exec, std::size_t count, const IndexTask& task) {
  exec == Execution::parallel ? parallel::for_each(count, task) : serial::for_each(count, task);
}

Rational sum(Execution exec, std::size_t count, const RationalTerm& term) {
  return exec == Execution::parallel ? parallel::sum(count, term) : serial::sum(count, term);
}

std::vector<LatticePoint> scan_box(Execution exec, const LatticePoint& lo, const LatticePoint& hi,
                                   const std::vector<IntHalfspace>& constraints) {
  return exec == Execution::parallel ? parallel::scan_box(lo, hi, constraints)
                                     : serial::scan_box(lo, hi, constraints);
}

}  // namespace kaz::kernels
