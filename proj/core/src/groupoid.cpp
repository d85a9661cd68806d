#include "gpd/groupoid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

#include "gpd/errors.hpp"
#include "gpd/group.hpp"
#include "gpd/perm.hpp"

namespace gpd {

struct FiniteGroupoid::Backend {
  virtual ~Backend() = default;
  virtual MorId inverse(const FiniteGroupoid& g, MorId m) const = 0;
  // Precondition: tgt(f) == src(g2).
  virtual MorId compose(const FiniteGroupoid& g, MorId g2, MorId f) const = 0;
};

namespace {

[[noreturn]] void structural(const std::string& what) { throw StructuralError(what); }

std::string mor_str(MorId m) { return "morphism " + std::to_string(m); }

}  // namespace

// ---------------------------------------------------------------------------
// Backends

struct FiniteGroupoid::TableBackend final : Backend {
  std::vector<std::uint64_t> keys;  // (g << 32) | f, sorted
  std::vector<MorId> vals;
  std::vector<MorId> inv;

  MorId inverse(const FiniteGroupoid&, MorId m) const override { return inv[m]; }

  MorId compose(const FiniteGroupoid&, MorId g2, MorId f) const override {
    const std::uint64_t key = (static_cast<std::uint64_t>(g2) << 32) | f;
    const auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key)
      structural("composition table has no entry for composable pair (" + std::to_string(g2) +
                 ", " + std::to_string(f) + ")");
    return vals[static_cast<std::size_t>(it - keys.begin())];
  }
};

struct FiniteGroupoid::TowerBackend final : Backend {
  std::vector<std::uint32_t> size_of_obj;
  std::vector<MorId> block_off;  // per object; block_off[n_objects] == num_morphisms
  std::uint32_t cache_max = 0;   // sizes <= cache_max have packed tables
  std::vector<std::uint32_t> packed_off;  // per size 0..cache_max+1
  std::vector<std::uint64_t> packed;      // nibble-packed perms, by size then rank
  std::unordered_map<std::uint64_t, std::uint32_t> local_rank;  // pack | size<<48 -> rank

  std::uint64_t key_of(std::uint64_t pack, std::uint32_t n) const {
    return pack | (static_cast<std::uint64_t>(n) << 48);
  }

  MorId inverse(const FiniteGroupoid& g, MorId m) const override {
    const ObjId o = g.src(m);
    const std::uint32_t n = size_of_obj[o];
    const std::uint32_t local = m - block_off[o];
    if (n <= cache_max) {
      const std::uint64_t p = packed[packed_off[n] + local];
      std::uint64_t r = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t img = (p >> (4 * i)) & 0xf;
        r |= static_cast<std::uint64_t>(i) << (4 * img);
      }
      return block_off[o] + local_rank.at(key_of(r, n));
    }
    return block_off[o] + static_cast<MorId>(perm_rank(perm_inverse(perm_unrank(n, local))));
  }

  MorId compose(const FiniteGroupoid& g, MorId g2, MorId f) const override {
    const ObjId o = g.src(f);
    const std::uint32_t n = size_of_obj[o];
    const std::uint32_t lg = g2 - block_off[o];
    const std::uint32_t lf = f - block_off[o];
    if (n <= cache_max) {
      const std::uint64_t pg = packed[packed_off[n] + lg];
      const std::uint64_t pf = packed[packed_off[n] + lf];
      std::uint64_t r = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t mid = (pf >> (4 * i)) & 0xf;
        r |= ((pg >> (4 * mid)) & 0xf) << (4 * i);
      }
      return block_off[o] + local_rank.at(key_of(r, n));
    }
    const Perm a = perm_unrank(n, lg);
    const Perm b = perm_unrank(n, lf);
    return block_off[o] + static_cast<MorId>(perm_rank(perm_compose(a, b)));
  }
};

struct FiniteGroupoid::ActionBackend final : Backend {
  std::shared_ptr<const Group> group;
  std::uint32_t carrier = 0;
  std::vector<std::uint32_t> act;  // act[g * carrier + s]

  MorId inverse(const FiniteGroupoid& g, MorId m) const override {
    const std::uint32_t ord = group->order;
    const std::uint32_t s = m / ord;
    const std::uint32_t e = m % ord;
    const std::uint32_t t = act[static_cast<std::size_t>(e) * carrier + s];
    (void)g;
    return t * ord + group->inverse(e);
  }

  MorId compose(const FiniteGroupoid&, MorId g2, MorId f) const override {
    const std::uint32_t ord = group->order;
    return (f / ord) * ord + group->times(g2 % ord, f % ord);
  }
};

struct FiniteGroupoid::PairBackend final : Backend {
  GroupoidPtr left_parent;
  GroupoidPtr right_parent;
  std::vector<MorId> u;  // component in left_parent
  std::vector<MorId> v;  // component in right_parent
  std::vector<std::uint32_t> block_begin;  // per object, morphisms sorted by (u, v)

  MorId locate(ObjId at, MorId cu, MorId cv) const {
    const std::uint32_t lo = block_begin[at];
    const std::uint32_t hi = block_begin[at + 1];
    std::uint32_t a = lo, b = hi;
    while (a < b) {
      const std::uint32_t mid = a + (b - a) / 2;
      if (u[mid] < cu || (u[mid] == cu && v[mid] < cv))
        a = mid + 1;
      else
        b = mid;
    }
    if (a == hi || u[a] != cu || v[a] != cv)
      structural("componentwise operation left the morphism set of a pair groupoid");
    return a;
  }

  MorId inverse(const FiniteGroupoid& g, MorId m) const override {
    return locate(g.tgt(m), left_parent->inverse(u[m]), right_parent->inverse(v[m]));
  }

  MorId compose(const FiniteGroupoid& g, MorId g2, MorId f) const override {
    return locate(g.src(f), left_parent->compose_unchecked(u[g2], u[f]),
                  right_parent->compose_unchecked(v[g2], v[f]));
  }
};

struct FiniteGroupoid::SumBackend final : Backend {
  std::vector<GroupoidPtr> parts;
  std::vector<std::uint32_t> obj_off;  // size parts+1
  std::vector<std::uint32_t> mor_off;

  std::size_t part_of_mor(MorId m) const {
    const auto it = std::upper_bound(mor_off.begin(), mor_off.end(), m);
    return static_cast<std::size_t>(it - mor_off.begin()) - 1;
  }

  MorId inverse(const FiniteGroupoid&, MorId m) const override {
    const std::size_t p = part_of_mor(m);
    return mor_off[p] + parts[p]->inverse(m - mor_off[p]);
  }

  MorId compose(const FiniteGroupoid&, MorId g2, MorId f) const override {
    const std::size_t p = part_of_mor(f);
    return mor_off[p] + parts[p]->compose_unchecked(g2 - mor_off[p], f - mor_off[p]);
  }
};

// ---------------------------------------------------------------------------
// Core accessors

FiniteGroupoid::FiniteGroupoid() = default;
FiniteGroupoid::~FiniteGroupoid() = default;

MorId FiniteGroupoid::inverse(MorId m) const { return backend_->inverse(*this, m); }

std::optional<MorId> FiniteGroupoid::compose(MorId g, MorId f) const {
  if (tgt_[f] != src_[g]) return std::nullopt;
  return backend_->compose(*this, g, f);
}

MorId FiniteGroupoid::compose_unchecked(MorId g, MorId f) const {
  return backend_->compose(*this, g, f);
}

std::span<const MorId> FiniteGroupoid::morphisms_from(ObjId x) const {
  return {hom_order_.data() + out_begin_[x], hom_order_.data() + out_begin_[x + 1]};
}

std::span<const MorId> FiniteGroupoid::hom(ObjId x, ObjId y) const {
  const MorId* lo = hom_order_.data() + out_begin_[x];
  const MorId* hi = hom_order_.data() + out_begin_[x + 1];
  const MorId* first = std::partition_point(lo, hi, [&](MorId a) { return tgt_[a] < y; });
  const MorId* last = std::partition_point(first, hi, [&](MorId a) { return tgt_[a] <= y; });
  return {first, last};
}

void FiniteGroupoid::finish_construction() {
  const std::uint32_t m = num_morphisms();
  out_begin_.assign(n_objects_ + 1, 0);
  for (MorId i = 0; i < m; ++i) ++out_begin_[src_[i] + 1];
  for (std::uint32_t x = 0; x < n_objects_; ++x) out_begin_[x + 1] += out_begin_[x];
  hom_order_.resize(m);
  std::vector<std::uint32_t> cursor(out_begin_.begin(), out_begin_.end() - 1);
  for (MorId i = 0; i < m; ++i) hom_order_[cursor[src_[i]]++] = i;
  for (std::uint32_t x = 0; x < n_objects_; ++x) {
    auto lo = hom_order_.begin() + out_begin_[x];
    auto hi = hom_order_.begin() + out_begin_[x + 1];
    const auto by_tgt = [this](MorId a, MorId b) { return tgt_[a] < tgt_[b]; };
    if (!std::is_sorted(lo, hi, by_tgt)) std::stable_sort(lo, hi, by_tgt);
  }
}

// ---------------------------------------------------------------------------
// Factories

GroupoidPtr FiniteGroupoid::from_tables(std::uint32_t n_objects, std::vector<ObjId> src,
                                        std::vector<ObjId> tgt, std::vector<MorId> identity,
                                        std::vector<MorId> inverse,
                                        std::vector<ComposeEntry> compose, bool skeletal_hint) {
  const std::size_t m = src.size();
  if (tgt.size() != m) structural("src and tgt arrays differ in length");
  if (identity.size() != n_objects) structural("identity array length != number of objects");
  if (inverse.size() != m) structural("inverse array length != number of morphisms");
  for (std::size_t i = 0; i < m; ++i) {
    if (src[i] >= n_objects || tgt[i] >= n_objects)
      structural(mor_str(static_cast<MorId>(i)) + " has an endpoint out of range");
    if (inverse[i] >= m) structural("inverse of " + mor_str(static_cast<MorId>(i)) + " out of range");
  }
  for (std::uint32_t x = 0; x < n_objects; ++x) {
    const MorId e = identity[x];
    if (e >= m) structural("identity of object " + std::to_string(x) + " out of range");
    if (src[e] != x || tgt[e] != x)
      structural("identity of object " + std::to_string(x) + " is not an endomorphism of it");
  }

  auto table = std::make_unique<TableBackend>();
  table->inv = std::move(inverse);
  std::vector<std::pair<std::uint64_t, MorId>> rows;
  rows.reserve(compose.size());
  for (const ComposeEntry& e : compose) {
    if (e.g >= m || e.f >= m || e.gf >= m) structural("composition entry references an id out of range");
    if (tgt[e.f] != src[e.g])
      structural("composition entry (" + std::to_string(e.g) + ", " + std::to_string(e.f) +
                 ") pairs non-composable morphisms");
    rows.emplace_back((static_cast<std::uint64_t>(e.g) << 32) | e.f, e.gf);
  }
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].first == rows[i - 1].first) structural("duplicate composition entry");
  table->keys.reserve(rows.size());
  table->vals.reserve(rows.size());
  for (const auto& [k, v] : rows) {
    table->keys.push_back(k);
    table->vals.push_back(v);
  }

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->n_objects_ = n_objects;
  g->src_ = std::move(src);
  g->tgt_ = std::move(tgt);
  g->identity_ = std::move(identity);
  g->skeletal_hint_ = skeletal_hint;
  g->backend_ = std::move(table);
  g->finish_construction();
  return g;
}

GroupoidPtr FiniteGroupoid::permutation_tower(std::uint32_t max_size, std::uint64_t morphism_cap) {
  std::vector<std::uint32_t> sizes(max_size + 1);
  std::iota(sizes.begin(), sizes.end(), 0u);
  return permutation_blocks(std::move(sizes), morphism_cap);
}

GroupoidPtr FiniteGroupoid::permutation_blocks(std::vector<std::uint32_t> sizes,
                                               std::uint64_t morphism_cap) {
  const std::uint32_t n_objects = static_cast<std::uint32_t>(sizes.size());
  std::uint64_t total = 0;
  for (std::uint32_t s : sizes) {
    if (s > 12) throw DomainError("permutation block size above 12 is not supported");
    total += factorial(s);
  }
  if (total > morphism_cap)
    throw BoundError("permutation groupoid needs " + std::to_string(total) +
                     " morphisms, above the cap of " + std::to_string(morphism_cap));

  auto be = std::make_unique<TowerBackend>();
  be->size_of_obj = sizes;
  be->block_off.resize(n_objects + 1);
  std::uint32_t off = 0;
  for (std::uint32_t x = 0; x < n_objects; ++x) {
    be->block_off[x] = off;
    off += static_cast<std::uint32_t>(factorial(sizes[x]));
  }
  be->block_off[n_objects] = off;

  std::uint32_t cache_max = 0;
  for (std::uint32_t s : sizes) cache_max = std::max(cache_max, std::min(s, 8u));
  be->cache_max = cache_max;
  be->packed_off.resize(cache_max + 2);
  std::uint32_t poff = 0;
  for (std::uint32_t n = 0; n <= cache_max; ++n) {
    be->packed_off[n] = poff;
    poff += static_cast<std::uint32_t>(factorial(n));
  }
  be->packed_off[cache_max + 1] = poff;
  be->packed.resize(poff);
  for (std::uint32_t n = 0; n <= cache_max; ++n) {
    Perm p = perm_identity(n);
    std::uint32_t rank = 0;
    do {
      const std::uint64_t pk = perm_pack(p);
      be->packed[be->packed_off[n] + rank] = pk;
      be->local_rank.emplace(be->key_of(pk, n), rank);
      ++rank;
    } while (std::next_permutation(p.begin(), p.end()));
  }

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->n_objects_ = n_objects;
  g->src_.resize(total);
  g->tgt_.resize(total);
  g->identity_.resize(n_objects);
  for (std::uint32_t x = 0; x < n_objects; ++x) {
    std::fill(g->src_.begin() + be->block_off[x], g->src_.begin() + be->block_off[x + 1], x);
    std::fill(g->tgt_.begin() + be->block_off[x], g->tgt_.begin() + be->block_off[x + 1], x);
    g->identity_[x] = be->block_off[x];
  }
  // Distinct sizes mean hom sets between distinct objects are empty.
  std::vector<std::uint32_t> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  g->skeletal_hint_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  g->backend_ = std::move(be);
  g->finish_construction();
  return g;
}

GroupoidPtr FiniteGroupoid::from_action(std::shared_ptr<const Group> group, std::uint32_t carrier,
                                        std::vector<std::uint32_t> action,
                                        std::uint64_t morphism_cap) {
  if (!group) structural("action groupoid needs a group");
  const std::uint32_t ord = group->order;
  if (action.size() != static_cast<std::size_t>(ord) * carrier)
    structural("action table size != |group| * carrier");
  for (std::uint32_t t : action)
    if (t >= carrier) structural("action table value out of carrier range");
  const std::uint64_t total = static_cast<std::uint64_t>(ord) * carrier;
  if (total > morphism_cap)
    throw BoundError("action groupoid needs " + std::to_string(total) +
                     " morphisms, above the cap of " + std::to_string(morphism_cap));

  auto be = std::make_unique<ActionBackend>();
  be->carrier = carrier;
  be->act = std::move(action);

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->n_objects_ = carrier;
  g->src_.resize(total);
  g->tgt_.resize(total);
  g->identity_.resize(carrier);
  for (std::uint32_t s = 0; s < carrier; ++s) {
    std::fill(g->src_.begin() + static_cast<std::size_t>(s) * ord,
              g->src_.begin() + static_cast<std::size_t>(s + 1) * ord, s);
    g->identity_[s] = s * ord + group->identity;
    for (std::uint32_t e = 0; e < ord; ++e)
      g->tgt_[static_cast<std::size_t>(s) * ord + e] = be->act[static_cast<std::size_t>(e) * carrier + s];
  }
  be->group = std::move(group);
  g->backend_ = std::move(be);
  g->finish_construction();
  return g;
}

GroupoidPtr FiniteGroupoid::pair_product(GroupoidPtr left_parent, GroupoidPtr right_parent,
                                         std::uint32_t n_objects, std::vector<ObjId> src,
                                         std::vector<ObjId> tgt, std::vector<MorId> identity,
                                         std::vector<MorId> left_part, std::vector<MorId> right_part,
                                         bool skeletal_hint) {
  if (!left_parent || !right_parent) structural("pair groupoid needs both parents");
  const std::size_t m = src.size();
  if (tgt.size() != m || left_part.size() != m || right_part.size() != m)
    structural("pair groupoid component arrays differ in length");
  if (identity.size() != n_objects) structural("identity array length != number of objects");
  for (std::size_t i = 0; i < m; ++i) {
    if (src[i] >= n_objects || tgt[i] >= n_objects)
      structural(mor_str(static_cast<MorId>(i)) + " has an endpoint out of range");
    if (left_part[i] >= left_parent->num_morphisms() ||
        right_part[i] >= right_parent->num_morphisms())
      structural(mor_str(static_cast<MorId>(i)) + " references a parent morphism out of range");
    if (i > 0) {
      if (src[i] < src[i - 1]) structural("pair groupoid morphisms not grouped by source");
      if (src[i] == src[i - 1] &&
          (left_part[i] < left_part[i - 1] ||
           (left_part[i] == left_part[i - 1] && right_part[i] <= right_part[i - 1])))
        structural("pair groupoid morphisms not sorted by component within a source block");
    }
  }
  for (std::uint32_t x = 0; x < n_objects; ++x) {
    const MorId e = identity[x];
    if (e >= m || src[e] != x || tgt[e] != x)
      structural("identity of object " + std::to_string(x) + " malformed");
  }

  auto be = std::make_unique<PairBackend>();
  be->u = std::move(left_part);
  be->v = std::move(right_part);
  be->block_begin.assign(n_objects + 1, 0);
  for (std::size_t i = 0; i < m; ++i) ++be->block_begin[src[i] + 1];
  for (std::uint32_t x = 0; x < n_objects; ++x) be->block_begin[x + 1] += be->block_begin[x];

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->n_objects_ = n_objects;
  g->src_ = std::move(src);
  g->tgt_ = std::move(tgt);
  g->identity_ = std::move(identity);
  g->skeletal_hint_ = skeletal_hint;
  be->left_parent = std::move(left_parent);
  be->right_parent = std::move(right_parent);
  g->backend_ = std::move(be);
  g->finish_construction();
  return g;
}

GroupoidPtr FiniteGroupoid::disjoint_sum(std::vector<GroupoidPtr> parts) {
  // Flatten nested sums so delegation stays one level deep.
  std::vector<GroupoidPtr> leaves;
  for (const GroupoidPtr& p : parts) {
    if (!p) structural("disjoint sum over a null part");
    if (const auto* sum = dynamic_cast<const SumBackend*>(p->backend_.get())) {
      leaves.insert(leaves.end(), sum->parts.begin(), sum->parts.end());
    } else {
      leaves.push_back(p);
    }
  }

  auto be = std::make_unique<SumBackend>();
  be->obj_off.resize(leaves.size() + 1, 0);
  be->mor_off.resize(leaves.size() + 1, 0);
  std::uint64_t objs = 0, mors = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    be->obj_off[i] = static_cast<std::uint32_t>(objs);
    be->mor_off[i] = static_cast<std::uint32_t>(mors);
    objs += leaves[i]->num_objects();
    mors += leaves[i]->num_morphisms();
    if (objs > 0xffffffffull || mors > 0xffffffffull)
      throw BoundError("disjoint sum exceeds 32-bit id space");
  }
  be->obj_off[leaves.size()] = static_cast<std::uint32_t>(objs);
  be->mor_off[leaves.size()] = static_cast<std::uint32_t>(mors);

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->n_objects_ = static_cast<std::uint32_t>(objs);
  g->src_.resize(mors);
  g->tgt_.resize(mors);
  g->identity_.resize(objs);
  bool skeletal = true;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const FiniteGroupoid& part = *leaves[i];
    const std::uint32_t oo = be->obj_off[i];
    const std::uint32_t mo = be->mor_off[i];
    for (MorId k = 0; k < part.num_morphisms(); ++k) {
      g->src_[mo + k] = oo + part.src(k);
      g->tgt_[mo + k] = oo + part.tgt(k);
    }
    for (ObjId x = 0; x < part.num_objects(); ++x) g->identity_[oo + x] = mo + part.identity(x);
    skeletal = skeletal && part.skeletal_hint();
  }
  g->skeletal_hint_ = skeletal;
  be->parts = std::move(leaves);
  g->backend_ = std::move(be);
  g->finish_construction();
  return g;
}

// ---------------------------------------------------------------------------
// Classes and cardinality

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;

  explicit Dsu(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the least id as root
    parent[b] = a;
  }
};

}  // namespace

ClassPartition iso_classes(const FiniteGroupoid& g) {
  const std::uint32_t n = g.num_objects();
  ClassPartition out;
  if (g.skeletal_hint()) {
    out.reps.resize(n);
    std::iota(out.reps.begin(), out.reps.end(), 0u);
    out.class_of = out.reps;
    return out;
  }
  Dsu dsu(n);
  for (MorId m = 0; m < g.num_morphisms(); ++m) dsu.unite(g.src(m), g.tgt(m));
  out.class_of.resize(n);
  std::vector<std::uint32_t> index_of_root(n, 0xffffffffu);
  for (ObjId x = 0; x < n; ++x) {
    const std::uint32_t r = dsu.find(x);
    if (index_of_root[r] == 0xffffffffu) {
      index_of_root[r] = static_cast<std::uint32_t>(out.reps.size());
      out.reps.push_back(x);  // roots are least ids, first seen in ascending order
    }
    out.class_of[x] = index_of_root[r];
  }
  return out;
}

bool is_skeletal(const FiniteGroupoid& g) {
  if (g.skeletal_hint()) return true;
  return iso_classes(g).size() == g.num_objects();
}

Rational cardinality(const FiniteGroupoid& g) {
  Rational total;
  for (ObjId rep : iso_classes(g).reps) total += Rational::unit_fraction(g.aut_order(rep));
  return total;
}

Rational cardinality_by_sources(const FiniteGroupoid& g) {
  Rational total;
  for (ObjId x = 0; x < g.num_objects(); ++x) {
    const std::uint64_t out = g.morphisms_from(x).size();
    if (out == 0) structural("object " + std::to_string(x) + " has no morphisms, not even an identity");
    total += Rational::unit_fraction(out);
  }
  return total;
}

std::uint64_t composable_pair_count(const FiniteGroupoid& g) {
  std::vector<std::uint64_t> in_deg(g.num_objects(), 0);
  for (MorId m = 0; m < g.num_morphisms(); ++m) ++in_deg[g.tgt(m)];
  std::uint64_t total = 0;
  for (ObjId x = 0; x < g.num_objects(); ++x) total += in_deg[x] * g.morphisms_from(x).size();
  return total;
}

// ---------------------------------------------------------------------------
// Validation

void ValidationReport::note(std::string what) {
  ok = false;
  if (violations.size() < 16)
    violations.push_back(std::move(what));
  else if (violations.size() == 16)
    violations.push_back("(further violations suppressed)");
}

namespace {

bool report_full(const ValidationReport& r) { return r.violations.size() > 16; }

}  // namespace

ValidationReport validate_groupoid(const FiniteGroupoid& g, const ValidationLimits& limits) {
  ValidationReport rep;
  const std::uint32_t n = g.num_objects();
  const std::uint32_t m = g.num_morphisms();

  for (ObjId x = 0; x < n; ++x) {
    const MorId e = g.identity(x);
    if (g.src(e) != x || g.tgt(e) != x)
      rep.note("identity of object " + std::to_string(x) + " has wrong endpoints");
  }

  for (MorId f = 0; f < m && !report_full(rep); ++f) {
    try {
      const auto left = g.compose(f, g.identity(g.src(f)));
      if (!left || *left != f) rep.note(mor_str(f) + " changed under right identity");
      const auto right = g.compose(g.identity(g.tgt(f)), f);
      if (!right || *right != f) rep.note(mor_str(f) + " changed under left identity");

      const MorId inv = g.inverse(f);
      if (g.src(inv) != g.tgt(f) || g.tgt(inv) != g.src(f)) {
        rep.note("inverse of " + mor_str(f) + " has wrong endpoints");
      } else {
        if (g.inverse(inv) != f) rep.note("inverse of " + mor_str(f) + " is not involutive");
        const auto a = g.compose(f, inv);
        if (!a || *a != g.identity(g.tgt(f)))
          rep.note(mor_str(f) + " composed with its inverse is not the identity");
        const auto b = g.compose(inv, f);
        if (!b || *b != g.identity(g.src(f)))
          rep.note("inverse of " + mor_str(f) + " composed with it is not the identity");
      }
    } catch (const StructuralError& e) {
      rep.note(e.what());
    }
  }

  const std::uint64_t pairs = composable_pair_count(g);
  if (pairs > limits.max_pairs)
    throw BoundError("groupoid has " + std::to_string(pairs) +
                     " composable pairs, above the validation cap of " +
                     std::to_string(limits.max_pairs));

  for (MorId f = 0; f < m && !report_full(rep); ++f) {
    for (MorId g2 : g.morphisms_from(g.tgt(f))) {
      ++rep.pairs_checked;
      try {
        const auto r = g.compose(g2, f);
        if (!r) {
          rep.note("composable pair (" + std::to_string(g2) + ", " + std::to_string(f) +
                   ") has no composite");
          continue;
        }
        if (g.src(*r) != g.src(f) || g.tgt(*r) != g.tgt(g2))
          rep.note("composite of (" + std::to_string(g2) + ", " + std::to_string(f) +
                   ") has wrong endpoints");
      } catch (const StructuralError& e) {
        rep.note(e.what());
      }
    }
  }

  if (!rep.ok) return rep;  // skip associativity over a broken table

  std::uint64_t triples = 0;
  for (MorId f = 0; f < m; ++f) {
    for (MorId g2 : g.morphisms_from(g.tgt(f)))
      triples += g.morphisms_from(g.tgt(g2)).size();
    if (triples > limits.max_triples) break;
  }
  if (triples > limits.max_triples)
    throw BoundError("groupoid has over " + std::to_string(limits.max_triples) +
                     " composable triples; raise the validation cap to check associativity");

  for (MorId f = 0; f < m && !report_full(rep); ++f) {
    for (MorId g2 : g.morphisms_from(g.tgt(f))) {
      const MorId gf = g.compose_unchecked(g2, f);
      for (MorId h : g.morphisms_from(g.tgt(g2))) {
        ++rep.triples_checked;
        const MorId hg = g.compose_unchecked(h, g2);
        if (g.compose_unchecked(h, gf) != g.compose_unchecked(hg, f)) {
          rep.note("associativity fails on (" + std::to_string(h) + ", " + std::to_string(g2) +
                   ", " + std::to_string(f) + ")");
          if (report_full(rep)) break;
        }
      }
      if (report_full(rep)) break;
    }
  }
  return rep;
}

}  // namespace gpd
