#include "kaz/character.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kaz/error.hpp"

namespace kaz {

namespace {

RootData share(const RootSystemData& rd) { return RootSystemData::make(rd.factors()); }

void require_dominant(const RootSystemData& rd, const LatticePoint& lambda) {
  if (lambda.dim() != rd.rank()) throw UserError("weight has wrong dimension");
  if (!rd.is_dominant(lambda)) throw UserError("weights must be dominant");
}

std::int64_t dimension(const RootSystemData& rd, const LatticePoint& lambda) {
  Rational d = weyl_dim_polynomial(rd).evaluate(lambda.to_rational());
  if (!is_integer(d) || d < 1) throw InvariantViolation("Weyl dimension is not a positive integer");
  if (d > kMaxRepresentationDim)
    throw UserError("representation of dimension " + to_string(d) + " exceeds the desk-scale limit");
  return to_int64(d.get_num());
}

// Dominant weights of V_lambda: dominant mu with lambda - mu a nonnegative
// root combination. Subtracting single positive roots from dominant weights
// reaches all of them.
std::vector<LatticePoint> dominant_weights(const RootSystemData& rd, const LatticePoint& lambda) {
  std::set<LatticePoint> seen{lambda};
  std::deque<LatticePoint> queue{lambda};
  while (!queue.empty()) {
    LatticePoint cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : rd.positive_roots()) {
      LatticePoint next = cur - a.root;
      if (rd.is_dominant(next) && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

CharacterElement weight_multiplicities(const RootSystemData& rd, const LatticePoint& lambda) {
  require_dominant(rd, lambda);
  const std::int64_t dim = dimension(rd, lambda);

  std::vector<LatticePoint> dom = dominant_weights(rd, lambda);
  std::sort(dom.begin(), dom.end(), [&](const LatticePoint& a, const LatticePoint& b) {
    auto ha = height(rd, lambda - a), hb = height(rd, lambda - b);
    return ha != hb ? ha < hb : a < b;
  });

  const LatticePoint& rho = rd.rho();
  const Rational norm_top = rd.form(lambda + rho, lambda + rho);
  std::map<LatticePoint, std::int64_t> mult;
  mult[lambda] = 1;
  for (std::size_t idx = 1; idx < dom.size(); ++idx) {
    const LatticePoint& mu = dom[idx];
    Rational numer(0);
    for (const auto& a : rd.positive_roots()) {
      for (std::int64_t k = 1;; ++k) {
        LatticePoint nu = mu + k * a.root;
        auto it = mult.find(dominant_representative(rd, nu));
        if (it == mult.end() || it->second == 0) break;
        numer += Rational(it->second) * rd.form(nu, a.root);
      }
    }
    Rational denom = norm_top - rd.form(mu + rho, mu + rho);
    if (denom <= 0) throw InvariantViolation("Freudenthal denominator is not positive");
    Rational m = 2 * numer / denom;
    if (!is_integer(m) || m < 0) throw InvariantViolation("Freudenthal multiplicity is not a nonnegative integer");
    mult[mu] = to_int64(m.get_num());
  }

  CharacterElement out{share(rd), {}};
  std::int64_t total = 0;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    for (const auto& w : weyl_orbit(rd, mu)) {
      out.weights[w] = m;
      total += m;
    }
  }
  if (total != dim) throw InvariantViolation("weight multiplicities do not sum to the Weyl dimension");
  return out;
}

SpectrumSet tensor_spectrum(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu) {
  require_dominant(rd, lambda);
  require_dominant(rd, mu);
  const std::int64_t dl = dimension(rd, lambda), dm = dimension(rd, mu);
  // Expand the smaller factor into weights.
  const bool swap = dm > dl;
  const LatticePoint& top = swap ? mu : lambda;
  CharacterElement small = weight_multiplicities(rd, swap ? lambda : mu);

  std::map<LatticePoint, std::int64_t> signed_mult;
  const LatticePoint& rho = rd.rho();
  for (const auto& [w, m] : small.weights) {
    DominantConjugate c = dominant_conjugate(rd, top + w + rho);
    bool on_wall = std::any_of(rd.simple_roots().begin(), rd.simple_roots().end(), [&](std::size_t i) {
      return rd.pairing(c.weight, rd.positive_roots()[i]) == 0;
    });
    if (on_wall) continue;
    signed_mult[c.weight - rho] += c.length % 2 == 0 ? m : -m;
  }

  SpectrumSet out{share(rd), {}};
  Integer check(0);
  for (const auto& [nu, m] : signed_mult) {
    if (m < 0) throw InvariantViolation("negative tensor multiplicity");
    if (m == 0) continue;
    out.dominant_weights[nu] = m;
    check += Integer(static_cast<long>(m)) * Integer(static_cast<long>(dimension(rd, nu)));
  }
  if (check != Integer(static_cast<long>(dl)) * Integer(static_cast<long>(dm)))
    throw InvariantViolation("tensor decomposition fails the dimension identity");
  return out;
}

WeightSet spec_W(const SpectrumSet& s) {
  std::vector<LatticePoint> pts;
  for (const auto& [nu, m] : s.dominant_weights) {
    auto orbit = weyl_orbit(*s.root_data, nu);
    pts.insert(pts.end(), orbit.begin(), orbit.end());
  }
  return make_weight_set(s.root_data, std::move(pts), false);
}

PrvResult check_prv(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu) {
  WeightSet spec = spec_W(tensor_spectrum(rd, lambda, mu));
  std::set<LatticePoint> target(spec.points.begin(), spec.points.end());
  for (const auto& a : weyl_orbit(rd, lambda))
    for (const auto& b : weyl_orbit(rd, mu))
      if (!target.contains(a + b)) return {false, a + b};
  return {};
}

bool check_weight_polytope_additivity(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu) {
  RootData shared = share(rd);
  SpectrumSet s = tensor_spectrum(rd, lambda, mu);
  std::vector<LatticePoint> keys;
  for (const auto& [nu, m] : s.dominant_weights) keys.push_back(nu);
  auto lhs = minkowski_sum(weight_polytope(make_weight_set(shared, {lambda})),
                           weight_polytope(make_weight_set(shared, {mu})));
  return lhs == weight_polytope(make_weight_set(shared, keys));
}

WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) out[x + y] += m * n;
  return out;
}

}  // namespace kaz
