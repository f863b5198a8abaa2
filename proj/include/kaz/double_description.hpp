#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "kaz/linalg.hpp"

namespace kaz::dd {

using Incidence = boost::dynamic_bitset<>;

struct Ray {
  IntVector coords;  // primitive integer generator
  Incidence zeros;   // rows of the input that vanish on the ray
};

/// Extreme rays of the pointed cone {y : <row_i, y> >= 0 for all i}, by the
/// double-description method with rows inserted in the given order and
/// combinatorial adjacency. Throws UserError when the rows do not have full
/// column rank (the cone is not pointed).
std::vector<Ray> extreme_rays(const std::vector<IntVector>& rows);

}  // namespace kaz::dd
