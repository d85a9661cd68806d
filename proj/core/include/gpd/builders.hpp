#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gpd/functor.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

GroupoidPtr terminal_groupoid();

GroupoidPtr discrete_groupoid(std::uint32_t n);

// One object whose automorphisms are the given group. Explicit table, so the
// order is capped.
GroupoidPtr group_groupoid(std::shared_ptr<const Group> group, std::uint64_t compose_cap = 5'000'000);

struct ProductResult {
  GroupoidPtr groupoid;
  Functor proj_left;
  Functor proj_right;
};

// Componentwise product as an explicit table; the composition table has one
// entry per pair of composable pairs, against compose_cap.
ProductResult product_groupoid(GroupoidPtr a, GroupoidPtr b, std::uint64_t compose_cap = 5'000'000);

struct CoproductResult {
  GroupoidPtr groupoid;
  std::vector<Functor> inject;
};

CoproductResult coproduct_groupoid(std::vector<GroupoidPtr> parts);

struct SubgroupoidResult {
  GroupoidPtr groupoid;
  Functor include;
};

// Full subgroupoid on the given objects (deduplicated, ascending).
SubgroupoidResult full_subgroupoid(GroupoidPtr g, std::vector<ObjId> objects,
                                   std::uint64_t compose_cap = 5'000'000);

struct SkeletonResult {
  GroupoidPtr skeleton;
  Functor include;   // skeleton -> g
  Functor retract;   // g -> skeleton; retract * include is the identity on the nose
  NaturalIso unit;   // include * retract => identity of g
};

// One object per isomorphism class (the least id of each class). When g is
// already skeletal this returns g itself with identity data.
SkeletonResult skeletonize(GroupoidPtr g, std::uint64_t compose_cap = 5'000'000);

}  // namespace gpd
