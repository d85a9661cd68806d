#include "gpd/action.hpp"

#include "gpd/errors.hpp"

namespace gpd {

void validate_action(const GroupAction& a) {
  if (!a.group) throw StructuralError("action without a group");
  const std::uint32_t ord = a.group->order;
  if (a.map.size() != static_cast<std::size_t>(ord) * a.carrier)
    throw StructuralError("action table size != |group| * carrier");
  for (std::uint32_t v : a.map)
    if (v >= a.carrier) throw StructuralError("action table value out of carrier range");
  for (std::uint32_t s = 0; s < a.carrier; ++s)
    if (a.apply(a.group->identity, s) != s)
      throw DomainError("group identity moves carrier element " + std::to_string(s));
  for (std::uint32_t g = 0; g < ord; ++g)
    for (std::uint32_t h = 0; h < ord; ++h) {
      const std::uint32_t gh = a.group->times(g, h);
      for (std::uint32_t s = 0; s < a.carrier; ++s)
        if (a.apply(g, a.apply(h, s)) != a.apply(gh, s))
          throw DomainError("action incompatible with multiplication at (" + std::to_string(g) +
                            ", " + std::to_string(h) + ", " + std::to_string(s) + ")");
    }
}

GroupoidPtr action_groupoid(const GroupAction& a, std::uint64_t morphism_cap) {
  return FiniteGroupoid::from_action(a.group, a.carrier, a.map, morphism_cap);
}

}  // namespace gpd
