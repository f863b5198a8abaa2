#include "kaz/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "kaz/double_description.hpp"
#include "kaz/error.hpp"
#include "kaz/linalg.hpp"

namespace kaz {

namespace {

// Scales (a, b) so that a is a primitive integer vector.
Halfspace normalize(const RationalVector& normal, const Rational& offset) {
  IntVector prim = primitive_integer(normal);
  std::size_t i = 0;
  while (i < normal.dim() && normal[i] == 0) ++i;
  if (i == normal.dim()) return {normal, offset};
  return {to_rational(prim), offset * (Rational(prim[i]) / normal[i])};
}

Equation normalize_equation(const RationalVector& normal, const Rational& value) {
  Halfspace h = normalize(normal, value);
  // Sign convention: first nonzero entry positive.
  for (std::size_t i = 0; i < h.normal.dim(); ++i) {
    if (h.normal[i] == 0) continue;
    if (h.normal[i] < 0) {
      h.normal *= Rational(-1);
      h.offset = -h.offset;
    }
    break;
  }
  return {h.normal, h.offset};
}

IntVector scaled_row(const RationalVector& head, const Rational& tail) {
  RationalVector row(head.dim() + 1);
  for (std::size_t i = 0; i < head.dim(); ++i) row[i] = head[i];
  row[head.dim()] = tail;
  return primitive_integer(row);
}

}  // namespace

RationalPolytope RationalPolytope::empty(std::size_t ambient_dim) {
  RationalPolytope p;
  p.ambient_dim_ = ambient_dim;
  return p;
}

std::vector<Halfspace> RationalPolytope::facets() const {
  std::vector<Halfspace> out = facets_;
  for (const auto& e : equations_) {
    out.push_back({e.normal, e.value});
    out.push_back({-e.normal, -e.value});
  }
  return out;
}

bool RationalPolytope::contains(const RationalVector& x) const {
  if (is_empty()) return false;
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.value) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

Simplex::Simplex(std::vector<RationalVector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw UserError("simplex needs at least one vertex");
  Matrix edges;
  for (std::size_t i = 1; i < vertices_.size(); ++i) edges.push_back(vertices_[i] - vertices_[0]);
  if (rank(edges, vertices_[0].dim()) != edges.size()) throw UserError("degenerate simplex");
}

RationalPolytope convex_hull(std::vector<RationalVector> points) {
  if (points.empty()) throw UserError("empty point set");
  const std::size_t n = points.front().dim();
  if (n == 0) throw UserError("points must have dimension >= 1");
  for (const auto& p : points)
    if (p.dim() != n) throw UserError("points of mixed dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope out = RationalPolytope::empty(n);
  const RationalVector& base = points.front();
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - base);
  EchelonForm echelon = reduced_row_echelon(diffs, n);
  const std::size_t d = echelon.pivots.size();
  out.intrinsic_dim_ = static_cast<int>(d);

  for (const auto& c : nullspace(echelon.rows, n)) out.equations_.push_back(normalize_equation(c, dot(c, base)));
  std::sort(out.equations_.begin(), out.equations_.end(),
            [](const Equation& a, const Equation& b) { return a.normal < b.normal; });

  if (d == 0) {
    out.vertices_ = {base};
    return out;
  }

  // Work in the pivot coordinates, which restrict to an affine isomorphism on the hull.
  std::vector<IntVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    RationalVector y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = -p[echelon.pivots[i]];
    rows.push_back(scaled_row(y, Rational(1)));
  }
  std::vector<dd::Ray> rays = dd::extreme_rays(rows);

  const std::size_t m = points.size();
  std::vector<bool> is_vertex(m, false);
  dd::Incidence all(m);
  all.set();
  for (std::size_t i = 0; i < m; ++i) {
    dd::Incidence face = all;
    for (const auto& r : rays)
      if (r.zeros.test(i)) face &= r.zeros;
    is_vertex[i] = face.count() == 1;
  }
  std::vector<std::size_t> vertex_index(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_vertex[i]) continue;
    vertex_index[i] = out.vertices_.size();
    out.vertices_.push_back(points[i]);
  }

  struct FacetRecord {
    Halfspace h;
    std::vector<std::size_t> verts;
  };
  std::vector<FacetRecord> records;
  for (const auto& r : rays) {
    RationalVector normal(n);
    for (std::size_t i = 0; i < d; ++i) normal[echelon.pivots[i]] = Rational(r.coords[i]);
    FacetRecord rec{normalize(normal, Rational(r.coords[d])), {}};
    for (std::size_t i = 0; i < m; ++i)
      if (is_vertex[i] && r.zeros.test(i)) rec.verts.push_back(vertex_index[i]);
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(), [](const FacetRecord& a, const FacetRecord& b) {
    if (a.h.normal != b.h.normal) return a.h.normal < b.h.normal;
    return a.h.offset < b.h.offset;
  });
  for (auto& rec : records) {
    out.facets_.push_back(std::move(rec.h));
    out.facet_vertices_.push_back(std::move(rec.verts));
  }
  return out;
}

RationalPolytope convex_hull(const std::vector<LatticePoint>& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(p.to_rational());
  return convex_hull(std::move(pts));
}

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw UserError("Minkowski sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return RationalPolytope::empty(p.ambient_dim());
  std::vector<RationalVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return convex_hull(std::move(sums));
}

RationalPolytope scale(const RationalPolytope& p, const Rational& c) {
  if (c < 0) throw UserError("scale factor must be nonnegative");
  if (p.is_empty()) return p;
  if (c == 0) return convex_hull(std::vector<RationalVector>{RationalVector(p.ambient_dim())});
  RationalPolytope out = p;
  for (auto& v : out.vertices_) v *= c;
  for (auto& f : out.facets_) f.offset *= c;
  for (auto& e : out.equations_) e.value *= c;
  return out;
}

RationalPolytope translate(const RationalPolytope& p, const RationalVector& shift) {
  if (shift.dim() != p.ambient_dim()) throw UserError("translate: dimension mismatch");
  RationalPolytope out = p;
  for (auto& v : out.vertices_) v += shift;
  for (auto& f : out.facets_) f.offset += dot(f.normal, shift);
  for (auto& e : out.equations_) e.value += dot(e.normal, shift);
  return out;
}

std::vector<LatticePoint> lattice_points(const RationalPolytope& p, Execution exec) {
  if (p.is_empty()) return {};
  const std::size_t n = p.ambient_dim();
  LatticePoint lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = to_int64(ceil(mn));
    hi[i] = to_int64(floor(mx));
  }
  std::vector<kernels::IntHalfspace> constraints;
  for (const auto& h : p.facets()) {
    // Normals are primitive integers, so integer points satisfy <a,x> <= floor(b).
    IntVector a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = h.normal[i].get_num();
    constraints.push_back({std::move(a), floor(h.offset)});
  }
  return kernels::scan_box(exec, lo, hi, constraints);
}

RationalPolytope polytope_from_halfspaces(std::size_t ambient_dim, std::span<const Halfspace> halfspaces) {
  std::vector<IntVector> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const auto& h : halfspaces) {
    if (h.normal.dim() != ambient_dim) throw UserError("halfspace dimension mismatch");
    rows.push_back(scaled_row(-h.normal, h.offset));
  }
  IntVector t_nonneg(ambient_dim + 1);
  t_nonneg[ambient_dim] = 1;
  rows.push_back(std::move(t_nonneg));

  std::vector<dd::Ray> rays;
  try {
    rays = dd::extreme_rays(rows);
  } catch (const UserError&) {
    throw UserError("halfspace system does not define a bounded polytope");
  }
  std::vector<RationalVector> verts;
  for (const auto& r : rays) {
    const Integer& t = r.coords[ambient_dim];
    if (t == 0) throw UserError("halfspace system does not define a bounded polytope");
    RationalVector v(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) v[i] = Rational(r.coords[i], t);
    for (std::size_t i = 0; i < ambient_dim; ++i) v[i].canonicalize();
    verts.push_back(std::move(v));
  }
  if (verts.empty()) return RationalPolytope::empty(ambient_dim);
  return convex_hull(std::move(verts));
}

RationalPolytope intersect_halfspaces(const RationalPolytope& p, std::span<const Halfspace> halfspaces) {
  if (p.is_empty()) return p;
  for (const auto& h : halfspaces)
    if (h.normal.dim() != p.ambient_dim()) throw UserError("intersect_halfspaces: dimension mismatch");
  if (halfspaces.empty()) return p;
  std::vector<Halfspace> all = p.facets();
  all.insert(all.end(), halfspaces.begin(), halfspaces.end());
  return polytope_from_halfspaces(p.ambient_dim(), all);
}

std::vector<Simplex> triangulate(const RationalPolytope& p) {
  if (p.is_empty()) return {};
  if (p.intrinsic_dim() == 0) return {Simplex({p.vertices().front()})};
  std::vector<Simplex> cells;
  const RationalVector& apex = p.vertices().front();
  for (std::size_t f = 0; f < p.proper_facets().size(); ++f) {
    const auto& on_facet = p.facet_vertices()[f];
    if (std::find(on_facet.begin(), on_facet.end(), 0) != on_facet.end()) continue;
    std::vector<RationalVector> face;
    for (auto i : on_facet) face.push_back(p.vertices()[i]);
    for (const auto& cell : triangulate(convex_hull(std::move(face)))) {
      std::vector<RationalVector> verts{apex};
      verts.insert(verts.end(), cell.vertices().begin(), cell.vertices().end());
      cells.emplace_back(std::move(verts));
    }
  }
  return cells;
}

Rational simplex_volume(const Simplex& s) {
  const std::size_t k = s.dim();
  if (k == 0) return Rational(1);
  const std::size_t n = s.ambient_dim();
  Matrix edges;
  for (std::size_t i = 1; i <= k; ++i) edges.push_back(s.vertices()[i] - s.vertices()[0]);
  if (k == n) return abs(determinant(edges)) / factorial(static_cast<unsigned>(k));
  Integer den(1);
  for (const auto& e : edges)
    for (const auto& c : e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<IntVector> columns;
  for (const auto& e : edges) {
    IntVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = Rational(e[i] * den).get_num();
    columns.push_back(std::move(col));
  }
  Integer g = gcd_of_maximal_minors(columns);
  return Rational(g) / (power(Rational(den), static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k)));
}

Rational volume(const RationalPolytope& p, Execution exec) {
  if (!p.is_full_dimensional()) return Rational(0);
  std::vector<Simplex> cells = triangulate(p);
  return kernels::sum(exec, cells.size(), [&](std::size_t i) { return simplex_volume(cells[i]); });
}

RationalPolytope coordinate_projection(const RationalPolytope& p, std::span<const std::size_t> coords) {
  if (p.is_empty()) return RationalPolytope::empty(coords.size());
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices()) {
    RationalVector w(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) w[i] = v[coords[i]];
    pts.push_back(std::move(w));
  }
  return convex_hull(std::move(pts));
}

std::ostream& operator<<(std::ostream& os, const RationalPolytope& p) {
  os << "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) os << (i ? "," : "") << p.vertices()[i];
  return os << '}';
}

}  // namespace kaz
