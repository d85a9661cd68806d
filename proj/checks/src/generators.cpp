#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "gpd/builders.hpp"
#include "gpd/checks.hpp"
#include "gpd/errors.hpp"
#include "gpd/functor.hpp"
#include "gpd/group.hpp"

namespace gpd::checks {

namespace {

std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) {
  return static_cast<std::uint32_t>(rng() % bound);
}

std::shared_ptr<const Group> stock_group(std::uint32_t pick, bool cyclic_only) {
  static const auto make = [] {
    std::vector<std::shared_ptr<const Group>> gs;
    for (std::uint32_t n = 1; n <= 4; ++n)
      gs.push_back(std::make_shared<const Group>(cyclic_group(n)));
    gs.push_back(std::make_shared<const Group>(symmetric_group(3)));
    return gs;
  };
  static const std::vector<std::shared_ptr<const Group>> stock = make();
  return stock[pick % (cyclic_only ? 4 : stock.size())];
}

// One isomorphism-class block: n_objs mutually isomorphic objects with the
// given automorphism group, as explicit tables.
GroupoidPtr class_block(std::uint32_t n_objs, const std::shared_ptr<const Group>& group) {
  const std::uint32_t k = n_objs;
  const std::uint32_t o = group->order;
  const std::uint32_t m = k * k * o;
  std::vector<ObjId> src(m), tgt(m);
  std::vector<MorId> identity(k), inverse(m);
  const auto id_of = [&](std::uint32_t i, std::uint32_t j, std::uint32_t t) {
    return (i * k + j) * o + t;
  };
  for (std::uint32_t i = 0; i < k; ++i) {
    identity[i] = id_of(i, i, group->identity);
    for (std::uint32_t j = 0; j < k; ++j)
      for (std::uint32_t t = 0; t < o; ++t) {
        const MorId mid = id_of(i, j, t);
        src[mid] = i;
        tgt[mid] = j;
        inverse[mid] = id_of(j, i, group->inverse(t));
      }
  }
  std::vector<ComposeEntry> compose;
  compose.reserve(static_cast<std::size_t>(k) * k * k * o * o);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      for (std::uint32_t l = 0; l < k; ++l)
        for (std::uint32_t a = 0; a < o; ++a)
          for (std::uint32_t b = 0; b < o; ++b)
            compose.push_back(
                {id_of(j, l, a), id_of(i, j, b), id_of(i, l, group->times(a, b))});
  return FiniteGroupoid::from_tables(k, std::move(src), std::move(tgt), std::move(identity),
                                     std::move(inverse), std::move(compose), k == 1);
}

std::uint32_t element_order(const Group& g, std::uint32_t a) {
  std::uint32_t t = a, n = 1;
  while (t != g.identity) {
    t = g.times(t, a);
    ++n;
  }
  return n;
}

}  // namespace

BlockGroupoid random_block_groupoid(std::mt19937& rng, std::uint32_t max_objects,
                                    std::uint64_t max_morphisms, std::uint32_t max_blocks,
                                    bool cyclic_only) {
  BlockGroupoid out;
  std::vector<GroupoidPtr> parts;
  std::uint32_t objs = 0;
  std::uint64_t mors = 0;
  for (std::uint32_t attempt = 0; attempt < 8 && parts.size() < max_blocks; ++attempt) {
    std::uint32_t k = 1 + draw(rng, 3);
    auto group = stock_group(draw(rng, 8), cyclic_only);
    if (parts.empty() && (objs + k > max_objects ||
                          mors + static_cast<std::uint64_t>(k) * k * group->order > max_morphisms)) {
      k = 1;
      group = stock_group(0, true);
    }
    const std::uint64_t cost = static_cast<std::uint64_t>(k) * k * group->order;
    if (objs + k > max_objects || mors + cost > max_morphisms) continue;
    BlockGroupoid::Block b;
    b.first_obj = objs;
    b.first_mor = static_cast<MorId>(mors);
    b.n_objs = k;
    b.group = group;
    out.blocks.push_back(std::move(b));
    parts.push_back(class_block(k, group));
    objs += k;
    mors += cost;
  }
  out.g = parts.size() == 1 ? parts.front() : FiniteGroupoid::disjoint_sum(std::move(parts));
  return out;
}

Span random_span(std::mt19937& rng, const BlockGroupoid& domain, const BlockGroupoid& codomain,
                 std::uint32_t max_apex_blocks) {
  const BlockGroupoid apex =
      random_block_groupoid(rng, 6, 24, max_apex_blocks, true);

  // One leg: per apex block pick a target block, a homomorphism out of the
  // cyclic vertex group (an element whose order divides the generator's),
  // an object assignment, and a conjugator per object.
  const auto leg = [&](const BlockGroupoid& target) {
    Functor f;
    f.source = apex.g;
    f.target = target.g;
    f.obj.resize(apex.g->num_objects());
    f.mor.resize(apex.g->num_morphisms());
    for (std::uint32_t ab = 0; ab < apex.blocks.size(); ++ab) {
      const BlockGroupoid::Block& a = apex.blocks[ab];
      const std::uint32_t n = a.group->order;
      const std::uint32_t tb = draw(rng, static_cast<std::uint32_t>(target.blocks.size()));
      const BlockGroupoid::Block& t = target.blocks[tb];

      std::vector<std::uint32_t> images;
      for (std::uint32_t h = 0; h < t.group->order; ++h)
        if (n % element_order(*t.group, h) == 0) images.push_back(h);
      const std::uint32_t gen_image = images[draw(rng, static_cast<std::uint32_t>(images.size()))];
      // Cyclic source: element e is the e-th power of the generator.
      std::vector<std::uint32_t> phi(n);
      phi[0] = t.group->identity;
      for (std::uint32_t e = 1; e < n; ++e) phi[e] = t.group->times(phi[e - 1], gen_image);

      std::vector<std::uint32_t> sigma(a.n_objs), conj(a.n_objs);
      for (std::uint32_t i = 0; i < a.n_objs; ++i) {
        sigma[i] = draw(rng, t.n_objs);
        conj[i] = draw(rng, t.group->order);
      }
      for (std::uint32_t i = 0; i < a.n_objs; ++i) {
        f.obj[apex.object(ab, i)] = target.object(tb, sigma[i]);
        for (std::uint32_t j = 0; j < a.n_objs; ++j)
          for (std::uint32_t e = 0; e < n; ++e) {
            const std::uint32_t moved =
                t.group->times(t.group->times(conj[j], phi[e]), t.group->inverse(conj[i]));
            f.mor[apex.morphism(ab, i, j, e)] = target.morphism(tb, sigma[i], sigma[j], moved);
          }
      }
    }
    return f;
  };

  Span s;
  s.right = leg(domain);
  s.left = leg(codomain);
  return s;
}

std::pair<GroupoidOver, GroupoidOver> equal_vector_states(std::mt19937& rng,
                                                         const BlockGroupoid& base) {
  const auto z1 = stock_group(0, true);
  const auto z2 = stock_group(1, true);

  // Halves[c] = twice the intended vector entry at class c.
  std::vector<std::uint32_t> halves(base.blocks.size());
  bool any = false;
  for (auto& h : halves) {
    h = draw(rng, 5);
    any = any || h > 0;
  }
  if (!any) halves[0] = 1;

  struct Piece {
    std::uint32_t block;
    std::shared_ptr<const Group> group;
  };
  const auto assemble = [&](const std::vector<Piece>& pieces) {
    std::vector<GroupoidPtr> parts;
    parts.reserve(pieces.size());
    for (const Piece& p : pieces) parts.push_back(class_block(1, p.group));
    GroupoidPtr total =
        parts.size() == 1 ? parts.front() : FiniteGroupoid::disjoint_sum(std::move(parts));
    Functor proj;
    proj.source = total;
    proj.target = base.g;
    proj.obj.resize(total->num_objects());
    proj.mor.resize(total->num_morphisms());
    std::uint32_t obj = 0;
    MorId mor = 0;
    for (const Piece& p : pieces) {
      const ObjId target_obj = base.object(p.block, 0);
      proj.obj[obj] = target_obj;
      // Everything lands on the identity automorphism of the class
      // representative; entries depend only on the totals' own stabilizers.
      for (std::uint32_t t = 0; t < p.group->order; ++t)
        proj.mor[mor + t] = base.g->identity(target_obj);
      ++obj;
      mor += p.group->order;
    }
    GroupoidOver v;
    v.projection = std::move(proj);
    return v;
  };

  std::vector<Piece> rich, lean;
  for (std::uint32_t c = 0; c < halves.size(); ++c) {
    for (std::uint32_t r = 0; r < halves[c]; ++r) rich.push_back({c, z2});
    for (std::uint32_t r = 0; r < halves[c] / 2; ++r) lean.push_back({c, z1});
    if (halves[c] % 2 == 1) lean.push_back({c, z2});
  }
  return {assemble(rich), assemble(lean)};
}

}  // namespace gpd::checks
