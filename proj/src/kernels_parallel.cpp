#include <omp.h>

#include <exception>
#include <mutex>

#include "kaz/kernels.hpp"

namespace kaz::kernels::parallel {

namespace {

// Exceptions must not cross the OpenMP region boundary.
class FirstError {
 public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace

void for_each(std::size_t count, const IndexTask& task) {
  FirstError error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      task(static_cast<std::size_t>(i));
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
}

Rational sum(std::size_t count, const RationalTerm& term) {
  std::vector<Rational> terms(count);
  for_each(count, [&](std::size_t i) { terms[i] = term(i); });
  Rational total(0);
  for (const auto& t : terms) total += t;
  return total;
}

std::vector<LatticePoint> scan_box(const LatticePoint& lo, const LatticePoint& hi,
                                   const std::vector<IntHalfspace>& constraints) {
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (lo[i] > hi[i]) return {};
  detail::PointTester tester(constraints, lo, hi);
  const std::size_t slabs = static_cast<std::size_t>(hi[0] - lo[0] + 1);
  std::vector<std::vector<LatticePoint>> found(slabs);
  for_each(slabs, [&](std::size_t s) {
    detail::scan_slab(lo[0] + static_cast<std::int64_t>(s), lo, hi, tester, found[s]);
  });
  std::vector<LatticePoint> out;
  for (auto& f : found)
    for (auto& p : f) out.push_back(std::move(p));
  return out;
}

}  // namespace kaz::kernels::parallel
