#pragma once

#include "newtcut/base.hpp"

namespace newtcut {

/// Extremal rays of the pointed cone { y : row . y >= 0 for every row }, by the
/// double description method with an algebraic adjacency test. The rows must
/// span the ambient space; the output rays are primitive and lexicographically
/// sorted.
std::vector<BVec> dual_cone_rays(std::vector<BVec> rows);

/// Facets of the full-dimensional pointed cone spanned by the given generators,
/// each facet reported as the sorted set of generator indices lying on it.
std::vector<std::vector<int>> cone_facets(const std::vector<IVec>& generators);

}  // namespace newtcut
