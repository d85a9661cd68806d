#include "gpd/oscillator.hpp"

#include <memory>
#include <utility>
#include <vector>

#include "gpd/action.hpp"
#include "gpd/errors.hpp"
#include "gpd/group.hpp"
#include "gpd/perm.hpp"

namespace gpd::osc {

namespace {

// Morphism id offsets of the size blocks: block n starts at 0! + ... + (n-1)!.
std::vector<std::uint64_t> block_offsets(std::uint32_t max_size) {
  std::vector<std::uint64_t> off(max_size + 2, 0);
  for (std::uint32_t n = 0; n <= max_size; ++n) off[n + 1] = off[n] + factorial(n);
  return off;
}

}  // namespace

GroupoidPtr fin_sets(std::uint32_t max_size) {
  return FiniteGroupoid::permutation_tower(max_size);
}

Span annihilation_span(std::uint32_t max_size) {
  if (max_size == 0) throw DomainError("size ladder needs at least sizes 0 and 1");
  const GroupoidPtr base = fin_sets(max_size);
  const GroupoidPtr top = FiniteGroupoid::permutation_tower(max_size - 1);
  const std::vector<std::uint64_t> off = block_offsets(max_size);

  Span s;
  s.left.source = top;
  s.left.target = base;
  s.right.source = top;
  s.right.target = base;
  s.left.obj.resize(top->num_objects());
  s.right.obj.resize(top->num_objects());
  for (ObjId n = 0; n < top->num_objects(); ++n) {
    s.left.obj[n] = n;
    s.right.obj[n] = n + 1;
  }
  // Block offsets agree on shared sizes, so inclusion keeps morphism ids.
  s.left.mor.resize(top->num_morphisms());
  s.right.mor.resize(top->num_morphisms());
  for (MorId m = 0; m < top->num_morphisms(); ++m) {
    s.left.mor[m] = m;
    const std::uint32_t n = top->src(m);
    Perm p = perm_unrank(n, m - off[n]);
    p.push_back(static_cast<std::uint8_t>(n));  // fix the added top element
    s.right.mor[m] = static_cast<MorId>(off[n + 1] + perm_rank(p));
  }
  return s;
}

Span creation_span(std::uint32_t max_size) {
  return adjoint_span(annihilation_span(max_size));
}

GroupoidOver number_state(std::uint32_t n, std::uint32_t max_size) {
  if (n > max_size) throw DomainError("number state size exceeds the base");
  const std::vector<std::uint64_t> off = block_offsets(max_size);
  GroupoidOver out;
  out.projection.source = FiniteGroupoid::permutation_blocks({n});
  out.projection.target = fin_sets(max_size);
  out.projection.obj = {n};
  out.projection.mor.resize(factorial(n));
  for (MorId r = 0; r < out.projection.mor.size(); ++r)
    out.projection.mor[r] = static_cast<MorId>(off[n] + r);
  return out;
}

GroupoidOver two_colored_state(std::uint32_t max_size) {
  if (max_size > 7) throw DomainError("two-colored sets above size 7 are not supported");
  const std::vector<std::uint64_t> off = block_offsets(max_size);

  // One part per size n: bitmask colorings of {0..n-1} acted on by the
  // permutations, sigma moving the color at i to sigma(i).
  std::vector<GroupoidPtr> parts;
  parts.reserve(max_size + 1);
  for (std::uint32_t n = 0; n <= max_size; ++n) {
    const auto group = std::make_shared<const Group>(symmetric_group(n));
    const std::uint32_t states = 1u << n;
    GroupAction act;
    act.group = group;
    act.carrier = states;
    act.map.resize(static_cast<std::size_t>(group->order) * states);
    for (std::uint32_t e = 0; e < group->order; ++e) {
      const Perm p = perm_unrank(n, e);
      for (std::uint32_t c = 0; c < states; ++c) {
        std::uint32_t moved = 0;
        for (std::uint32_t i = 0; i < n; ++i)
          if (c & (1u << i)) moved |= 1u << p[i];
        act.map[static_cast<std::size_t>(e) * states + c] = moved;
      }
    }
    parts.push_back(action_groupoid(act));
  }

  GroupoidOver out;
  out.projection.source = coproduct_groupoid(parts).groupoid;
  out.projection.target = fin_sets(max_size);
  out.projection.obj.reserve(out.projection.source->num_objects());
  out.projection.mor.reserve(out.projection.source->num_morphisms());
  for (std::uint32_t n = 0; n <= max_size; ++n) {
    const std::uint32_t states = 1u << n;
    const std::uint64_t ord = factorial(n);
    for (std::uint32_t c = 0; c < states; ++c) {
      out.projection.obj.push_back(n);
      for (std::uint64_t e = 0; e < ord; ++e)
        out.projection.mor.push_back(static_cast<MorId>(off[n] + e));
    }
  }
  return out;
}

CommutationReport verify_commutation(std::uint32_t max_size, const SpanOptions& options) {
  const Span lower = annihilation_span(max_size);
  const Span raise = creation_span(max_size);
  const ClassTable table = class_table(fin_sets(max_size));

  CommutationReport rep;
  rep.annihilate = matrix_of(table, table, lower);
  rep.create = matrix_of(table, table, raise);
  rep.raise_then_lower = matrix_of(table, table, compose_spans(lower, raise, options));
  rep.lower_then_raise_plus_one = matrix_of(
      table, table,
      sum_spans(compose_spans(raise, lower, options), identity_span(table.base)));
  std::size_t r = 0;
  while (r < table.rows() &&
         rep.raise_then_lower.corner(r + 1) == rep.lower_then_raise_plus_one.corner(r + 1))
    ++r;
  rep.agree_rows = r;
  rep.block_verified = r >= max_size;
  rep.excluded_band = "entries with either size equal to " + std::to_string(max_size) +
                      ", where the clipped ladder cannot raise past the top";
  return rep;
}

}  // namespace gpd::osc
