#include "gpd/group.hpp"

#include <algorithm>

#include "gpd/errors.hpp"
#include "gpd/perm.hpp"

namespace gpd {

void validate_group(const Group& g) {
  const std::uint32_t n = g.order;
  if (n == 0) throw StructuralError("group of order 0");
  if (g.identity >= n) throw StructuralError("group identity out of range");
  if (g.mult.size() != static_cast<std::size_t>(n) * n)
    throw StructuralError("group multiplication table has wrong size");
  if (g.inv.size() != n) throw StructuralError("group inverse table has wrong size");
  for (std::uint32_t v : g.mult)
    if (v >= n) throw StructuralError("group multiplication table value out of range");
  for (std::uint32_t v : g.inv)
    if (v >= n) throw StructuralError("group inverse table value out of range");

  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.times(g.identity, a) != a || g.times(a, g.identity) != a)
      throw DomainError("group identity fails on element " + std::to_string(a));
    if (g.times(a, g.inv[a]) != g.identity || g.times(g.inv[a], a) != g.identity)
      throw DomainError("group inverse fails on element " + std::to_string(a));
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c)))
          throw DomainError("group associativity fails on (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(c) + ")");
}

Group symmetric_group(std::uint32_t n) {
  if (n > 7) throw DomainError("symmetric group table above n = 7 is not supported");
  const std::uint32_t ord = static_cast<std::uint32_t>(factorial(n));
  Group g;
  g.order = ord;
  g.identity = 0;
  g.mult.resize(static_cast<std::size_t>(ord) * ord);
  g.inv.resize(ord);
  std::vector<Perm> perms(ord);
  {
    Perm p = perm_identity(n);
    std::uint32_t rank = 0;
    do {
      perms[rank++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  for (std::uint32_t a = 0; a < ord; ++a) {
    g.inv[a] = static_cast<std::uint32_t>(perm_rank(perm_inverse(perms[a])));
    for (std::uint32_t b = 0; b < ord; ++b)
      g.mult[static_cast<std::size_t>(a) * ord + b] =
          static_cast<std::uint32_t>(perm_rank(perm_compose(perms[a], perms[b])));
  }
  return g;
}

Group cyclic_group(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  Group g;
  g.order = n;
  g.identity = 0;
  g.mult.resize(static_cast<std::size_t>(n) * n);
  g.inv.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    g.inv[a] = (n - a) % n;
    for (std::uint32_t b = 0; b < n; ++b) g.mult[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return g;
}

}  // namespace gpd
