#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kaz/polynomial.hpp"
#include "kaz/polytope.hpp"

namespace kaz {

enum class FactorType { torus, gl, sl };

/// One simple factor of a product group. For a torus, n is its rank.
struct Factor {
  FactorType type;
  std::size_t n;
  friend bool operator==(const Factor&, const Factor&) = default;
};

std::string to_string(const Factor& f);

/// A positive root, stored in weight coordinates together with its coroot as
/// a pairing vector: <lambda, coroot> = dot(coroot, lambda).
struct PositiveRoot {
  LatticePoint root;
  LatticePoint coroot;
  std::int64_t rho_pairing;
  bool simple;
};

/// Root data of a product of tori, GL(n) and SL(n) factors.
///
/// Weight coordinates form a basis of the character lattice: standard
/// coordinates for GL(n) and tori, fundamental-weight coordinates for SL(n).
/// Factors occupy consecutive coordinate blocks in the order given.
class RootSystemData {
 public:
  /// Throws UserError on an empty list or degenerate factor (SL(n) needs n >= 2).
  static std::shared_ptr<const RootSystemData> make(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  /// First weight coordinate of each factor.
  const std::vector<std::size_t>& offsets() const { return offsets_; }
  std::size_t rank() const { return rank_; }
  std::size_t group_dim() const { return rank_ + 2 * positive_roots_.size(); }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  /// Indices into positive_roots() of the simple roots.
  const std::vector<std::size_t>& simple_roots() const { return simple_; }
  /// Integral Weyl vector: pairs to 1 with every simple coroot. For GL(n)
  /// it is (n-1, ..., 1, 0), a shift of the usual rho by a W-fixed vector.
  const LatticePoint& rho() const { return rho_; }
  /// W-invariant positive definite form on weight coordinates.
  const Matrix& inner_product() const { return gram_; }
  std::uint64_t weyl_order() const { return weyl_order_; }
  bool is_torus() const { return positive_roots_.empty(); }

  /// Chamber as halfspaces -<lambda, alpha_i^vee> <= 0 over simple roots.
  std::vector<Halfspace> chamber() const;
  bool is_dominant(const LatticePoint& lambda) const;
  bool is_dominant(const RationalVector& lambda) const;
  std::int64_t pairing(const LatticePoint& lambda, const PositiveRoot& a) const;
  Rational form(const LatticePoint& a, const LatticePoint& b) const;

  /// Simple reflection s_i for i indexing simple_roots().
  LatticePoint reflect(const LatticePoint& lambda, std::size_t i) const;
  RationalVector reflect(const RationalVector& lambda, std::size_t i) const;

  friend bool operator==(const RootSystemData& a, const RootSystemData& b) { return a.factors_ == b.factors_; }

 private:
  RootSystemData() = default;
  std::vector<Factor> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t rank_ = 0;
  std::vector<PositiveRoot> positive_roots_;
  std::vector<std::size_t> simple_;
  LatticePoint rho_;
  Matrix gram_;
  std::uint64_t weyl_order_ = 1;
};

using RootData = std::shared_ptr<const RootSystemData>;

/// Finite set of weights, sorted and deduplicated.
struct WeightSet {
  RootData root_data;
  std::vector<LatticePoint> points;
  bool dominant = false;
};

/// Validates dimensions and, when dominant is requested, the chamber inequalities.
/// Throws UserError("weights must be dominant") on a non-dominant point.
WeightSet make_weight_set(RootData rd, std::vector<LatticePoint> points, bool dominant = true);

/// Sorted W-orbit, by breadth-first search over simple reflections.
std::vector<LatticePoint> weyl_orbit(const RootSystemData& rd, const LatticePoint& lambda);

struct DominantConjugate {
  LatticePoint weight;
  /// Number of simple reflections used; its parity is the sign of the element.
  std::size_t length = 0;
};
DominantConjugate dominant_conjugate(const RootSystemData& rd, const LatticePoint& lambda);
LatticePoint dominant_representative(const RootSystemData& rd, const LatticePoint& lambda);

/// Weyl dimension polynomial: prod over positive roots of
/// (<lambda, a^vee> + <rho, a^vee>) / <rho, a^vee>.
MultivariatePolynomial weyl_dim_polynomial(const RootSystemData& rd);
/// Top-degree part of the dimension polynomial.
MultivariatePolynomial phi_W(const RootSystemData& rd);

RationalPolytope weight_polytope(const WeightSet& a);
RationalPolytope moment_polytope(const WeightSet& a);

/// Halves of sum over positive roots of <beta, a^vee>: the height of a root-lattice element.
std::int64_t height(const RootSystemData& rd, const LatticePoint& beta);

}  // namespace kaz
