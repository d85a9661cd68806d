#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

// A finite group acting on a finite set. map[g * carrier + s] is g.s.
struct GroupAction {
  std::shared_ptr<const Group> group;
  std::uint32_t carrier = 0;
  std::vector<std::uint32_t> map;

  std::uint32_t apply(std::uint32_t g, std::uint32_t s) const {
    return map[static_cast<std::size_t>(g) * carrier + s];
  }
};

// Checks identity action and compatibility with multiplication; throws
// StructuralError or DomainError. Assumes the group itself is valid.
void validate_action(const GroupAction& a);

// Objects are carrier elements; the morphism s -> g.s for each (g, s).
GroupoidPtr action_groupoid(const GroupAction& a, std::uint64_t morphism_cap = 20'000'000);

}  // namespace gpd
