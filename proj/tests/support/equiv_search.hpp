#pragma once

#include "gpd/groupoid.hpp"

namespace gpd::testsupport {

// Decides whether two small groupoids are equivalent by exhaustive search:
// isomorphism classes are matched up and each matched pair of automorphism
// groups is compared by trying bijections. Only intended for apexes with at
// most 6 objects and automorphism groups of order at most 8; throws
// BoundError beyond that.
bool equivalent_groupoids(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace gpd::testsupport
