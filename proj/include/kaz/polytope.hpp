#pragma once

#include <span>
#include <vector>

#include "kaz/kernels.hpp"
#include "kaz/vector.hpp"

namespace kaz {

/// <normal, x> <= offset.
struct Halfspace {
  RationalVector normal;
  Rational offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// <normal, x> = value.
struct Equation {
  RationalVector normal;
  Rational value;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Convex polytope over Q with canonical V- and H-representations.
///
/// Vertices are irredundant and sorted lexicographically; equality compares
/// vertex lists. Proper facets are stored with primitive integer normals
/// together with the affine-hull equations, and each facet records which
/// vertices it contains. The empty polytope has intrinsic dimension -1.
class RationalPolytope {
 public:
  static RationalPolytope empty(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  bool is_empty() const { return intrinsic_dim_ < 0; }
  bool is_full_dimensional() const { return intrinsic_dim_ == static_cast<int>(ambient_dim_); }

  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& proper_facets() const { return facets_; }
  const std::vector<Equation>& equations() const { return equations_; }
  /// Indices into vertices() of the vertices lying on each proper facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }

  /// Full H-representation: proper facets followed by each equation as a pair
  /// of opposite inequalities.
  std::vector<Halfspace> facets() const;

  bool contains(const RationalVector& x) const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend RationalPolytope convex_hull(std::vector<RationalVector> points);
  friend RationalPolytope scale(const RationalPolytope& p, const Rational& c);
  friend RationalPolytope translate(const RationalPolytope& p, const RationalVector& shift);

  std::size_t ambient_dim_ = 0;
  int intrinsic_dim_ = -1;
  std::vector<RationalVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Equation> equations_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
};

/// Affinely independent vertex list; the cell type of triangulations.
class Simplex {
 public:
  /// Throws UserError when the vertices are affinely dependent.
  explicit Simplex(std::vector<RationalVector> vertices);

  const std::vector<RationalVector>& vertices() const { return vertices_; }
  std::size_t dim() const { return vertices_.size() - 1; }
  std::size_t ambient_dim() const { return vertices_.front().dim(); }

 private:
  std::vector<RationalVector> vertices_;
};

RationalPolytope convex_hull(std::vector<RationalVector> points);
RationalPolytope convex_hull(const std::vector<LatticePoint>& points);
RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q);
/// Throws UserError for c < 0; scale(P, 0) is the origin.
RationalPolytope scale(const RationalPolytope& p, const Rational& c);
RationalPolytope translate(const RationalPolytope& p, const RationalVector& shift);

/// Integer points of P in lexicographic order (bounding-box scan against the H-rep).
std::vector<LatticePoint> lattice_points(const RationalPolytope& p, Execution exec = Execution::parallel);

/// P intersected with the halfspaces; the empty polytope when infeasible.
RationalPolytope intersect_halfspaces(const RationalPolytope& p, std::span<const Halfspace> halfspaces);

/// Vertex enumeration of a bounded H-polytope. Throws UserError if unbounded.
RationalPolytope polytope_from_halfspaces(std::size_t ambient_dim, std::span<const Halfspace> halfspaces);

/// Cones the first vertex over a recursive triangulation of the facets that
/// avoid it. Cells use only vertices of P.
std::vector<Simplex> triangulate(const RationalPolytope& p);

/// Lattice-normalized ambient volume (the unit cube of Z^n has volume 1);
/// zero unless P is full-dimensional.
Rational volume(const RationalPolytope& p, Execution exec = Execution::parallel);

/// Volume of a simplex with respect to the lattice-normalized measure on its
/// own affine hull (Z^n intersected with the direction space has covolume 1).
Rational simplex_volume(const Simplex& s);

/// Image of P under the projection onto the listed coordinates.
RationalPolytope coordinate_projection(const RationalPolytope& p, std::span<const std::size_t> coords);

std::ostream& operator<<(std::ostream& os, const RationalPolytope& p);

}  // namespace kaz
