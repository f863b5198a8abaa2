#pragma once

#include <map>
#include <optional>

#include "kaz/root_data.hpp"

namespace kaz {

using WeightMultiset = std::map<LatticePoint, std::int64_t>;

/// Formal character: weight -> positive multiplicity.
struct CharacterElement {
  RootData root_data;
  WeightMultiset weights;
};

/// Dominant highest weights with multiplicities. Spectral comparisons look at
/// the keys only.
struct SpectrumSet {
  RootData root_data;
  WeightMultiset dominant_weights;
};

/// Largest dimension the character oracles accept.
inline constexpr std::int64_t kMaxRepresentationDim = 1'000'000;

/// Full weight system of V_lambda by Freudenthal's recursion over dominant
/// weights. Throws UserError for non-dominant lambda or dim V_lambda > 10^6.
CharacterElement weight_multiplicities(const RootSystemData& rd, const LatticePoint& lambda);

/// Decomposition of V_lambda (x) V_mu by the Brauer-Klimyk rule.
SpectrumSet tensor_spectrum(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu);

/// Union of the W-orbits of the keys; not flagged dominant.
WeightSet spec_W(const SpectrumSet& s);

struct PrvResult {
  bool holds = true;
  std::optional<LatticePoint> witness;
};

/// Checks W.lambda + W.mu inside Spec_W(V_lambda (x) V_mu).
PrvResult check_prv(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu);

/// Delta_W(lambda) + Delta_W(mu) == Delta_W(keys of the tensor spectrum).
bool check_weight_polytope_additivity(const RootSystemData& rd, const LatticePoint& lambda, const LatticePoint& mu);

/// Pairwise-sum convolution of two weight multisets.
WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b);

}  // namespace kaz
