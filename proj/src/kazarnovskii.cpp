#include "kaz/kazarnovskii.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "kaz/error.hpp"
#include "kaz/univariate.hpp"

namespace kaz {

std::string to_string(IndexFormula f) {
  switch (f) {
    case IndexFormula::weight_polytope: return "weight-polytope";
    case IndexFormula::moment_polytope: return "moment-polytope";
    case IndexFormula::newton_mixed_volume: return "newton-mixed-volume";
  }
  return "?";
}

namespace {

void require_integral(const Rational& v, const std::string& what) {
  if (v < 0 || !is_integer(v)) throw InvariantViolation("formula inconsistency: " + what + " = " + to_string(v));
}

}  // namespace

IntersectionIndexResult kazarnovskii_index(const RootSystemData& rd, std::span<const WeightSet> sets,
                                           Execution exec) {
  const std::size_t m = rd.group_dim();
  if (sets.size() != m)
    throw UserError("need dim G = " + std::to_string(m) + " weight sets, got " + std::to_string(sets.size()));
  std::vector<RationalPolytope> weight, moment;
  for (const auto& a : sets) {
    if (!(*a.root_data == rd)) throw UserError("weight sets belong to a different group");
    weight.push_back(weight_polytope(a));
    moment.push_back(moment_polytope(a));
  }
  MultivariatePolynomial phi = phi_W(rd);
  MultivariatePolynomial phi2 = phi * phi;
  IntersectionIndexResult r;
  r.intermediate = mixed_integral(phi2, weight, exec);
  r.moment_intermediate = mixed_integral(phi2, moment, exec);
  r.value = factorial(static_cast<unsigned>(m)) * r.intermediate / static_cast<unsigned long>(rd.weyl_order());
  Rational via_moment = factorial(static_cast<unsigned>(m)) * r.moment_intermediate;
  if (r.value != via_moment)
    throw InvariantViolation("formula inconsistency: weight form " + to_string(r.value) + " vs moment form " +
                             to_string(via_moment));
  require_integral(r.value, "intersection index");
  if (rd.is_torus()) {
    std::vector<FiniteSet> fs;
    for (const auto& a : sets) fs.push_back(make_finite_set(a.points));
    Integer bk = bk_count(fs, exec);
    if (Rational(bk) != r.value) throw InvariantViolation("formula inconsistency: torus index differs from bk_count");
  }
  return r;
}

Integer bk_count(std::span<const FiniteSet> sets, Execution exec) {
  if (sets.empty()) throw UserError("bk_count needs at least one set");
  const std::size_t n = sets.front().dim;
  if (sets.size() != n) throw UserError("bk_count needs exactly n sets in Z^n");
  std::vector<RationalPolytope> hulls;
  for (const auto& s : sets) {
    if (s.dim != n) throw UserError("bk_count sets live in different dimensions");
    hulls.push_back(hull(s));
  }
  Rational v = factorial(static_cast<unsigned>(n)) * mixed_volume(hulls, exec);
  require_integral(v, "BKK count");
  return v.get_num();
}

HilbertSample hilbert_function(const RootSystemData& rd, const WeightSet& a, std::int64_t k) {
  if (k < 1) throw UserError("Hilbert function needs k >= 1");
  MultivariatePolynomial fw = weyl_dim_polynomial(rd);
  auto pts = lattice_points(scale(moment_polytope(a), Rational(static_cast<long>(k))));
  HilbertSample s{k, Integer(0), Rational(0)};
  for (const auto& p : pts) {
    Rational d = fw.evaluate(p.to_rational());
    s.value += d.get_num() * d.get_num();
  }
  const unsigned m = static_cast<unsigned>(rd.group_dim());
  s.normalized = factorial(m) * Rational(s.value) / power(Rational(static_cast<long>(k)), m);
  return s;
}

HilbertAsymptotics hilbert_asymptotic_check(const RootSystemData& rd, const WeightSet& a,
                                            std::span<const std::int64_t> k_schedule) {
  if (k_schedule.empty()) throw UserError("empty k schedule");
  for (std::size_t i = 0; i < k_schedule.size(); ++i)
    if (k_schedule[i] < 1 || (i > 0 && k_schedule[i] <= k_schedule[i - 1]))
      throw UserError("k schedule must be positive and strictly increasing");
  HilbertAsymptotics out;
  std::vector<WeightSet> tuple(rd.group_dim(), a);
  out.target = kazarnovskii_index(rd, tuple).value;
  for (auto k : k_schedule) out.samples.push_back(hilbert_function(rd, a, k));
  for (std::size_t i = 1; i < out.samples.size(); ++i)
    if (out.samples[i].value < out.samples[i - 1].value)
      throw InvariantViolation("Hilbert function is not nondecreasing");
  Rational diff = out.samples.back().normalized - out.target;
  if (diff < 0) diff = -diff;
  out.final_deviation = out.target == 0 ? diff : Rational(diff / out.target);
  out.final_relative_deviation = out.final_deviation.get_d();
  return out;
}

namespace {

// Exponents shifted so that both minima are zero.
using Poly2 = std::map<LatticePoint, Integer>;

Poly2 normalize_support(const LaurentPolynomial2& f) {
  if (f.empty()) throw UserError("polynomial has empty support");
  std::int64_t lo0 = f.begin()->first[0], lo1 = f.begin()->first[1];
  for (const auto& [e, c] : f) {
    if (e.dim() != 2) throw UserError("resultant oracle needs bivariate exponents");
    if (c == 0) throw UserError("coefficients must be nonzero on the support");
    lo0 = std::min(lo0, e[0]);
    lo1 = std::min(lo1, e[1]);
  }
  Poly2 out;
  for (const auto& [e, c] : f) out[LatticePoint{e[0] - lo0, e[1] - lo1}] = c;
  return out;
}

// Initial form of f along w, as a univariate polynomial in the primitive
// direction u orthogonal to w. A monomial yields degree 0.
IntPolynomial initial_form(const Poly2& f, const LatticePoint& w, const LatticePoint& u) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : f) best = std::min(best, w[0] * e[0] + w[1] * e[1]);
  std::vector<std::pair<std::int64_t, Integer>> face;
  std::optional<LatticePoint> base;
  for (const auto& [e, c] : f) {
    if (w[0] * e[0] + w[1] * e[1] != best) continue;
    if (!base) base = e;
    // e = base + t u, read off in a coordinate where u is nonzero.
    LatticePoint d = e - *base;
    face.emplace_back(u[0] != 0 ? d[0] / u[0] : d[1] / u[1], c);
  }
  std::int64_t tmin = face.front().first;
  for (const auto& [t, c] : face) tmin = std::min(tmin, t);
  std::vector<Integer> coeffs;
  for (const auto& [t, c] : face) {
    std::size_t i = static_cast<std::size_t>(t - tmin);
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] += c;
  }
  return IntPolynomial(std::move(coeffs));
}

// Every direction along which an initial form can have two or more terms is
// orthogonal to a difference of support points.
std::set<LatticePoint> facial_directions(const Poly2& f, const Poly2& g) {
  std::set<LatticePoint> dirs{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Poly2* p : {&f, &g}) {
    for (auto a = p->begin(); a != p->end(); ++a) {
      for (auto b = std::next(a); b != p->end(); ++b) {
        std::int64_t dx = b->first[0] - a->first[0], dy = b->first[1] - a->first[1];
        std::int64_t d = std::gcd(dx, dy);
        LatticePoint w{-dy / d, dx / d};
        dirs.insert(w);
        dirs.insert(LatticePoint{-w[0], -w[1]});
      }
    }
  }
  return dirs;
}

void check_facial_systems(const Poly2& f, const Poly2& g) {
  for (const auto& w : facial_directions(f, g)) {
    LatticePoint u{-w[1], w[0]};
    IntPolynomial a = initial_form(f, w, u), b = initial_form(g, w, u);
    if (common_nonzero_root_degree(a, b) > 0)
      throw NonGenericInput("non-generic input, resample coefficients (initial system has a root in a torus)");
  }
}

// Coefficients of f as a polynomial in the variable `elim`, each in Z[other].
std::vector<IntPolynomial> as_polynomial_in(const Poly2& f, std::size_t elim) {
  std::size_t other = 1 - elim;
  std::vector<std::vector<Integer>> rows;
  for (const auto& [e, c] : f) {
    std::size_t j = static_cast<std::size_t>(e[elim]), i = static_cast<std::size_t>(e[other]);
    if (rows.size() <= j) rows.resize(j + 1);
    if (rows[j].size() <= i) rows[j].resize(i + 1);
    rows[j][i] += c;
  }
  std::vector<IntPolynomial> out;
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

IntPolynomial sylvester_resultant(const std::vector<IntPolynomial>& f, const std::vector<IntPolynomial>& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t j = 0; j <= df; ++j) m[r][r + df - j] = f[j];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t j = 0; j <= dg; ++j) m[dg + r][r + dg - j] = g[j];
  return determinant(std::move(m));
}

Integer count_by_elimination(const Poly2& f, const Poly2& g, std::size_t elim) {
  IntPolynomial r = sylvester_resultant(as_polynomial_in(f, elim), as_polynomial_in(g, elim));
  if (r.is_zero()) throw NonGenericInput("non-generic input, resample coefficients (resultant vanishes)");
  return r.degree() - r.order_at_zero();
}

}  // namespace

Integer resultant_root_count_2d(const LaurentPolynomial2& f_in, const LaurentPolynomial2& g_in) {
  Poly2 f = normalize_support(f_in), g = normalize_support(g_in);
  check_facial_systems(f, g);
  Integer by_y = count_by_elimination(f, g, 1);
  Integer by_x = count_by_elimination(f, g, 0);
  if (by_x != by_y)
    throw NonGenericInput("non-generic input, resample coefficients (elimination orders disagree: " +
                          to_string(by_x) + " vs " + to_string(by_y) + ")");
  return by_x;
}

GlCrosscheck kaz_gl_crosscheck(std::span<const WeightSet> sets, Execution exec) {
  if (sets.empty()) throw UserError("no weight sets");
  const RootSystemData& rd = *sets.front().root_data;
  if (rd.factors().size() != 1 || rd.factors().front() != Factor{FactorType::gl, kCrosscheckRank})
    throw UserError("GL(n) cross-check is limited to n = 2 (desk-scale limit)");
  GlCrosscheck out;
  out.via_mixed_integral = kazarnovskii_index(rd, sets, exec).value;
  std::vector<RationalPolytope> newton;
  for (const auto& a : sets) newton.push_back(newton_polytope_gl(a).polytope());
  out.via_newton_volume = factorial(4) * mixed_volume(newton, exec);
  if (out.via_mixed_integral != out.via_newton_volume)
    throw InvariantViolation("formula inconsistency: mixed integral " + to_string(out.via_mixed_integral) +
                             " vs Newton mixed volume " + to_string(out.via_newton_volume));
  return out;
}

}  // namespace kaz
