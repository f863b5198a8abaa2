#include "kaz/double_description.hpp"

#include "kaz/error.hpp"

namespace kaz::dd {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

// Picks rank-many independent rows, scanning in input order.
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<std::size_t> chosen;
  Matrix reduced;  // each row has a leading 1 at pivots[i]
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < dim; ++r) {
    RationalVector v = to_rational(rows[r]);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (v[pivots[i]] == 0) continue;
      Rational f = v[pivots[i]];
      for (std::size_t c = 0; c < dim; ++c) v[c] -= f * reduced[i][c];
    }
    std::size_t p = 0;
    while (p < dim && v[p] == 0) ++p;
    if (p == dim) continue;
    v *= 1 / Rational(v[p]);
    reduced.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace

std::vector<Ray> extreme_rays(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw UserError("double description: no constraints");
  const std::size_t dim = rows.front().size();
  const std::size_t num_rows = rows.size();

  std::vector<std::size_t> basis = independent_rows(rows, dim);
  if (basis.size() < dim) throw UserError("double description: cone is not pointed");

  Matrix b;
  for (auto r : basis) b.push_back(to_rational(rows[r]));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector e(dim);
    e[j] = 1;
    auto col = solve(b, e);
    Ray ray{primitive_integer(*col), Incidence(num_rows)};
    for (std::size_t i = 0; i < dim; ++i)
      if (i != j) ray.zeros.set(basis[i]);
    rays.push_back(std::move(ray));
  }

  Incidence in_basis(num_rows);
  for (auto r : basis) in_basis.set(r);

  for (std::size_t row = 0; row < num_rows; ++row) {
    if (in_basis.test(row)) continue;
    const IntVector& a = rows[row];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].coords);
      int s = sgn(value[i]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else rays[i].zeros.set(row);
    }
    if (neg.empty()) continue;

    std::vector<Ray> created;
    for (auto p : pos) {
      for (auto n : neg) {
        Incidence common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t other = 0; other < rays.size() && adjacent; ++other) {
          if (other == p || other == n) continue;
          if (common.is_subset_of(rays[other].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector combo(dim);
        for (std::size_t c = 0; c < dim; ++c)
          combo[c] = value[p] * rays[n].coords[c] - value[n] * rays[p].coords[c];
        Ray ray{primitive_integer(std::move(combo)), std::move(common)};
        ray.zeros.set(row);
        created.push_back(std::move(ray));
      }
    }

    std::vector<Ray> next;
    next.reserve(rays.size() - neg.size() + created.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (sgn(value[i]) >= 0) next.push_back(std::move(rays[i]));
    for (auto& r : created) next.push_back(std::move(r));
    rays = std::move(next);
  }
  return rays;
}

}  // namespace kaz::dd
