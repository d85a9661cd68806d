#include "gpd/builders.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gpd/errors.hpp"

namespace gpd {

GroupoidPtr terminal_groupoid() { return discrete_groupoid(1); }

GroupoidPtr discrete_groupoid(std::uint32_t n) {
  std::vector<ObjId> src(n), tgt(n);
  std::vector<MorId> identity(n), inverse(n);
  std::iota(src.begin(), src.end(), 0u);
  tgt = src;
  identity = src;
  inverse = src;
  std::vector<ComposeEntry> compose(n);
  for (std::uint32_t i = 0; i < n; ++i) compose[i] = {i, i, i};
  return FiniteGroupoid::from_tables(n, std::move(src), std::move(tgt), std::move(identity),
                                     std::move(inverse), std::move(compose), true);
}

GroupoidPtr group_groupoid(std::shared_ptr<const Group> group, std::uint64_t compose_cap) {
  if (!group) throw StructuralError("group groupoid needs a group");
  const std::uint32_t n = group->order;
  if (static_cast<std::uint64_t>(n) * n > compose_cap)
    throw BoundError("group of order " + std::to_string(n) +
                     " needs a composition table above the cap");
  std::vector<ObjId> src(n, 0), tgt(n, 0);
  std::vector<MorId> identity{group->identity};
  std::vector<MorId> inverse(group->inv.begin(), group->inv.end());
  std::vector<ComposeEntry> compose;
  compose.reserve(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) compose.push_back({a, b, group->times(a, b)});
  return FiniteGroupoid::from_tables(1, std::move(src), std::move(tgt), std::move(identity),
                                     std::move(inverse), std::move(compose), true);
}

ProductResult product_groupoid(GroupoidPtr a, GroupoidPtr b, std::uint64_t compose_cap) {
  if (!a || !b) throw StructuralError("product of null groupoids");
  const std::uint64_t pairs = composable_pair_count(*a) * composable_pair_count(*b);
  const std::uint64_t mors = static_cast<std::uint64_t>(a->num_morphisms()) * b->num_morphisms();
  if (pairs > compose_cap || mors > compose_cap)
    throw BoundError("product groupoid needs " + std::to_string(std::max(pairs, mors)) +
                     " table entries, above the cap");

  const std::uint32_t nb = b->num_objects();
  const std::uint32_t mb = b->num_morphisms();
  const std::uint32_t n = a->num_objects() * nb;
  std::vector<ObjId> src(mors), tgt(mors);
  std::vector<MorId> identity(n), inverse(mors);
  for (MorId ma = 0; ma < a->num_morphisms(); ++ma)
    for (MorId k = 0; k < mb; ++k) {
      const MorId id = ma * mb + k;
      src[id] = a->src(ma) * nb + b->src(k);
      tgt[id] = a->tgt(ma) * nb + b->tgt(k);
      inverse[id] = a->inverse(ma) * mb + b->inverse(k);
    }
  for (ObjId xa = 0; xa < a->num_objects(); ++xa)
    for (ObjId xb = 0; xb < nb; ++xb) identity[xa * nb + xb] = a->identity(xa) * mb + b->identity(xb);

  std::vector<ComposeEntry> compose;
  compose.reserve(pairs);
  for (MorId fa = 0; fa < a->num_morphisms(); ++fa)
    for (MorId ga : a->morphisms_from(a->tgt(fa))) {
      const MorId ca = a->compose_unchecked(ga, fa);
      for (MorId fb = 0; fb < mb; ++fb)
        for (MorId gb : b->morphisms_from(b->tgt(fb))) {
          compose.push_back(
              {ga * mb + gb, fa * mb + fb, ca * mb + b->compose_unchecked(gb, fb)});
        }
    }

  ProductResult out;
  out.groupoid =
      FiniteGroupoid::from_tables(n, std::move(src), std::move(tgt), std::move(identity),
                                  std::move(inverse), std::move(compose),
                                  a->skeletal_hint() && b->skeletal_hint());
  out.proj_left.source = out.groupoid;
  out.proj_left.target = a;
  out.proj_right.source = out.groupoid;
  out.proj_right.target = b;
  out.proj_left.obj.resize(n);
  out.proj_right.obj.resize(n);
  for (ObjId x = 0; x < n; ++x) {
    out.proj_left.obj[x] = x / nb;
    out.proj_right.obj[x] = x % nb;
  }
  out.proj_left.mor.resize(mors);
  out.proj_right.mor.resize(mors);
  for (MorId m2 = 0; m2 < mors; ++m2) {
    out.proj_left.mor[m2] = m2 / mb;
    out.proj_right.mor[m2] = m2 % mb;
  }
  return out;
}

CoproductResult coproduct_groupoid(std::vector<GroupoidPtr> parts) {
  CoproductResult out;
  out.groupoid = FiniteGroupoid::disjoint_sum(parts);
  std::uint32_t obj_off = 0, mor_off = 0;
  for (const GroupoidPtr& p : parts) {
    Functor in;
    in.source = p;
    in.target = out.groupoid;
    in.obj.resize(p->num_objects());
    std::iota(in.obj.begin(), in.obj.end(), obj_off);
    in.mor.resize(p->num_morphisms());
    std::iota(in.mor.begin(), in.mor.end(), mor_off);
    obj_off += p->num_objects();
    mor_off += p->num_morphisms();
    out.inject.push_back(std::move(in));
  }
  return out;
}

SubgroupoidResult full_subgroupoid(GroupoidPtr g, std::vector<ObjId> objects,
                                   std::uint64_t compose_cap) {
  if (!g) throw StructuralError("subgroupoid of a null groupoid");
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  for (ObjId x : objects)
    if (x >= g->num_objects()) throw StructuralError("subgroupoid object out of range");

  const std::uint32_t n = static_cast<std::uint32_t>(objects.size());
  std::vector<char> in_set(g->num_objects(), 0);
  std::vector<ObjId> new_obj(g->num_objects(), 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    in_set[objects[i]] = 1;
    new_obj[objects[i]] = i;
  }

  std::vector<MorId> kept;
  for (ObjId x : objects)
    for (MorId m : g->morphisms_from(x))
      if (in_set[g->tgt(m)]) kept.push_back(m);
  std::vector<MorId> new_mor(g->num_morphisms(), 0xffffffffu);
  for (std::uint32_t i = 0; i < kept.size(); ++i) new_mor[kept[i]] = i;

  const std::uint32_t m = static_cast<std::uint32_t>(kept.size());
  std::vector<ObjId> src(m), tgt(m);
  std::vector<MorId> identity(n), inverse(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    src[i] = new_obj[g->src(kept[i])];
    tgt[i] = new_obj[g->tgt(kept[i])];
    inverse[i] = new_mor[g->inverse(kept[i])];
  }
  for (std::uint32_t i = 0; i < n; ++i) identity[i] = new_mor[g->identity(objects[i])];

  std::uint64_t pair_bound = 0;
  std::vector<std::uint64_t> in_deg(n, 0);
  for (std::uint32_t i = 0; i < m; ++i) ++in_deg[tgt[i]];
  std::vector<std::uint64_t> out_deg(n, 0);
  for (std::uint32_t i = 0; i < m; ++i) ++out_deg[src[i]];
  for (std::uint32_t x = 0; x < n; ++x) pair_bound += in_deg[x] * out_deg[x];
  if (pair_bound > compose_cap)
    throw BoundError("subgroupoid needs " + std::to_string(pair_bound) +
                     " composition entries, above the cap");

  std::vector<ComposeEntry> compose;
  compose.reserve(pair_bound);
  for (std::uint32_t fi = 0; fi < m; ++fi) {
    const MorId f = kept[fi];
    for (MorId g2 : g->morphisms_from(g->tgt(f))) {
      if (!in_set[g->tgt(g2)]) continue;
      compose.push_back({new_mor[g2], fi, new_mor[g->compose_unchecked(g2, f)]});
    }
  }

  SubgroupoidResult out;
  out.groupoid = FiniteGroupoid::from_tables(n, std::move(src), std::move(tgt),
                                             std::move(identity), std::move(inverse),
                                             std::move(compose));
  out.include.source = out.groupoid;
  out.include.target = g;
  out.include.obj = objects;
  out.include.mor = kept;
  return out;
}

SkeletonResult skeletonize(GroupoidPtr g, std::uint64_t compose_cap) {
  if (!g) throw StructuralError("skeleton of a null groupoid");
  const ClassPartition classes = iso_classes(*g);

  SkeletonResult out;
  if (classes.size() == g->num_objects()) {
    out.skeleton = g;
    out.include = identity_functor(g);
    out.retract = out.include;
    out.unit = identity_iso(out.include);
    return out;
  }

  SubgroupoidResult sub = full_subgroupoid(g, classes.reps, compose_cap);
  out.skeleton = sub.groupoid;
  out.include = std::move(sub.include);

  // A chosen isomorphism rep(x) -> x for every object, identity on reps,
  // found by search from each representative. Deterministic: objects are
  // discovered through the hom index in id order.
  std::vector<MorId> to_obj(g->num_objects(), 0xffffffffu);
  std::deque<ObjId> queue;
  for (ObjId rep : classes.reps) {
    to_obj[rep] = g->identity(rep);
    queue.push_back(rep);
  }
  while (!queue.empty()) {
    const ObjId y = queue.front();
    queue.pop_front();
    for (MorId m : g->morphisms_from(y)) {
      const ObjId t = g->tgt(m);
      if (to_obj[t] != 0xffffffffu) continue;
      to_obj[t] = g->compose_unchecked(m, to_obj[y]);
      queue.push_back(t);
    }
  }

  std::vector<MorId> old_to_new(g->num_morphisms(), 0xffffffffu);
  for (std::uint32_t i = 0; i < out.include.mor.size(); ++i) old_to_new[out.include.mor[i]] = i;

  out.retract.source = g;
  out.retract.target = out.skeleton;
  out.retract.obj = classes.class_of;
  out.retract.mor.resize(g->num_morphisms());
  for (MorId f = 0; f < g->num_morphisms(); ++f) {
    const MorId fwd = g->compose_unchecked(f, to_obj[g->src(f)]);
    const MorId back = g->compose_unchecked(g->inverse(to_obj[g->tgt(f)]), fwd);
    out.retract.mor[f] = old_to_new[back];
  }

  out.unit.from = compose_functors(out.include, out.retract);
  out.unit.to = identity_functor(g);
  out.unit.component.assign(to_obj.begin(), to_obj.end());
  return out;
}

}  // namespace gpd
