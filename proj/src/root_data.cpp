#include "kaz/root_data.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kaz/error.hpp"

namespace kaz {

std::string to_string(const Factor& f) {
  switch (f.type) {
    case FactorType::torus: return "T(" + std::to_string(f.n) + ")";
    case FactorType::gl: return "GL(" + std::to_string(f.n) + ")";
    case FactorType::sl: return "SL(" + std::to_string(f.n) + ")";
  }
  return "?";
}

namespace {

std::uint64_t factorial_u64(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Inverse of the type A_{r} Cartan matrix: min(i,j)(r+1-max(i,j))/(r+1), 1-based.
Rational inverse_cartan(std::size_t r, std::size_t i, std::size_t j) {
  std::size_t lo = std::min(i, j) + 1, hi = std::max(i, j) + 1;
  Rational v(static_cast<long>(lo * (r + 1 - hi)), static_cast<long>(r + 1));
  v.canonicalize();
  return v;
}

}  // namespace

std::shared_ptr<const RootSystemData> RootSystemData::make(std::vector<Factor> factors) {
  if (factors.empty()) throw UserError("group needs at least one factor");
  std::shared_ptr<RootSystemData> rd(new RootSystemData());
  std::size_t rank = 0;
  for (const auto& f : factors) {
    if (f.type == FactorType::sl && f.n < 2) throw UserError("SL(n) needs n >= 2");
    if (f.n < 1) throw UserError(to_string(f) + " is degenerate");
    if (f.n > 8) throw UserError(to_string(f) + " is beyond supported size");
    rd->offsets_.push_back(rank);
    rank += f.type == FactorType::sl ? f.n - 1 : f.n;
  }
  rd->factors_ = std::move(factors);
  rd->rank_ = rank;
  rd->rho_ = LatticePoint(rank);
  rd->gram_.assign(rank, RationalVector(rank));

  for (std::size_t fi = 0; fi < rd->factors_.size(); ++fi) {
    const Factor& f = rd->factors_[fi];
    const std::size_t off = rd->offsets_[fi];
    switch (f.type) {
      case FactorType::torus:
        for (std::size_t i = 0; i < f.n; ++i) rd->gram_[off + i][off + i] = 1;
        break;
      case FactorType::gl:
        rd->weyl_order_ *= factorial_u64(f.n);
        for (std::size_t i = 0; i < f.n; ++i) {
          rd->gram_[off + i][off + i] = 1;
          rd->rho_[off + i] = static_cast<std::int64_t>(f.n - 1 - i);
        }
        for (std::size_t i = 0; i < f.n; ++i) {
          for (std::size_t j = i + 1; j < f.n; ++j) {
            LatticePoint v(rank);
            v[off + i] = 1;
            v[off + j] = -1;
            rd->positive_roots_.push_back({v, v, static_cast<std::int64_t>(j - i), j == i + 1});
          }
        }
        break;
      case FactorType::sl: {
        rd->weyl_order_ *= factorial_u64(f.n);
        const std::size_t r = f.n - 1;
        for (std::size_t i = 0; i < r; ++i) {
          rd->rho_[off + i] = 1;
          for (std::size_t j = 0; j < r; ++j) rd->gram_[off + i][off + j] = inverse_cartan(r, i, j);
        }
        // alpha_{ij} = alpha_i + ... + alpha_{j-1}; in fundamental-weight
        // coordinates alpha_k is row k of the Cartan matrix.
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = i + 1; j <= r; ++j) {
            LatticePoint root(rank), coroot(rank);
            for (std::size_t k = i; k < j; ++k) {
              coroot[off + k] = 1;
              root[off + k] += 2;
              if (k > 0) root[off + k - 1] -= 1;
              if (k + 1 < r) root[off + k + 1] -= 1;
            }
            rd->positive_roots_.push_back({root, coroot, static_cast<std::int64_t>(j - i), j == i + 1});
          }
        }
        break;
      }
    }
  }
  for (std::size_t i = 0; i < rd->positive_roots_.size(); ++i)
    if (rd->positive_roots_[i].simple) rd->simple_.push_back(i);
  return rd;
}

std::vector<Halfspace> RootSystemData::chamber() const {
  std::vector<Halfspace> out;
  for (std::size_t i : simple_) {
    RationalVector n = -positive_roots_[i].coroot.to_rational();
    out.push_back({n, Rational(0)});
  }
  return out;
}

std::int64_t RootSystemData::pairing(const LatticePoint& lambda, const PositiveRoot& a) const {
  if (lambda.dim() != rank_) throw UserError("weight has wrong dimension");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += a.coroot[i] * lambda[i];
  return s;
}

bool RootSystemData::is_dominant(const LatticePoint& lambda) const {
  return std::all_of(simple_.begin(), simple_.end(),
                     [&](std::size_t i) { return pairing(lambda, positive_roots_[i]) >= 0; });
}

bool RootSystemData::is_dominant(const RationalVector& lambda) const {
  if (lambda.dim() != rank_) throw UserError("weight has wrong dimension");
  return std::all_of(simple_.begin(), simple_.end(), [&](std::size_t i) {
    return dot(positive_roots_[i].coroot.to_rational(), lambda) >= 0;
  });
}

Rational RootSystemData::form(const LatticePoint& a, const LatticePoint& b) const {
  Rational s(0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (gram_[i][j] != 0) s += gram_[i][j] * a[i] * b[j];
  return s;
}

LatticePoint RootSystemData::reflect(const LatticePoint& lambda, std::size_t i) const {
  const PositiveRoot& a = positive_roots_[simple_.at(i)];
  return lambda - pairing(lambda, a) * a.root;
}

RationalVector RootSystemData::reflect(const RationalVector& lambda, std::size_t i) const {
  const PositiveRoot& a = positive_roots_[simple_.at(i)];
  return lambda - dot(a.coroot.to_rational(), lambda) * a.root.to_rational();
}

WeightSet make_weight_set(RootData rd, std::vector<LatticePoint> points, bool dominant) {
  if (points.empty()) throw UserError("weight set must be nonempty");
  for (const auto& p : points) {
    if (p.dim() != rd->rank()) throw UserError("weight has wrong dimension for " + std::to_string(rd->rank()) +
                                               "-dimensional weight lattice");
    if (dominant && !rd->is_dominant(p)) throw UserError("weights must be dominant");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return WeightSet{std::move(rd), std::move(points), dominant};
}

std::vector<LatticePoint> weyl_orbit(const RootSystemData& rd, const LatticePoint& lambda) {
  if (lambda.dim() != rd.rank()) throw UserError("weight has wrong dimension");
  std::set<LatticePoint> seen{lambda};
  std::deque<LatticePoint> queue{lambda};
  while (!queue.empty()) {
    LatticePoint cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rd.simple_roots().size(); ++i) {
      LatticePoint next = rd.reflect(cur, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

DominantConjugate dominant_conjugate(const RootSystemData& rd, const LatticePoint& lambda) {
  if (lambda.dim() != rd.rank()) throw UserError("weight has wrong dimension");
  DominantConjugate out{lambda, 0};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rd.simple_roots().size(); ++i) {
      if (rd.pairing(out.weight, rd.positive_roots()[rd.simple_roots()[i]]) < 0) {
        out.weight = rd.reflect(out.weight, i);
        ++out.length;
        changed = true;
      }
    }
  }
  return out;
}

LatticePoint dominant_representative(const RootSystemData& rd, const LatticePoint& lambda) {
  return dominant_conjugate(rd, lambda).weight;
}

MultivariatePolynomial weyl_dim_polynomial(const RootSystemData& rd) {
  std::vector<LinearForm> forms;
  for (const auto& a : rd.positive_roots()) {
    Rational inv(1, a.rho_pairing);
    forms.push_back({inv * a.coroot.to_rational(), Rational(1)});
  }
  return product_of_linear_forms(rd.rank(), forms);
}

MultivariatePolynomial phi_W(const RootSystemData& rd) { return homogeneous_top(weyl_dim_polynomial(rd)); }

RationalPolytope weight_polytope(const WeightSet& a) {
  if (!a.dominant) throw UserError("weights must be dominant");
  std::vector<LatticePoint> all;
  for (const auto& p : a.points) {
    if (!a.root_data->is_dominant(p)) throw UserError("weights must be dominant");
    auto orbit = weyl_orbit(*a.root_data, p);
    all.insert(all.end(), orbit.begin(), orbit.end());
  }
  return convex_hull(all);
}

RationalPolytope moment_polytope(const WeightSet& a) {
  auto chamber = a.root_data->chamber();
  return intersect_halfspaces(weight_polytope(a), chamber);
}

std::int64_t height(const RootSystemData& rd, const LatticePoint& beta) {
  std::int64_t s = 0;
  for (const auto& a : rd.positive_roots()) s += rd.pairing(beta, a);
  if (s % 2 != 0) throw InvariantViolation("height of a non-root-lattice element");
  return s / 2;
}

}  // namespace kaz
