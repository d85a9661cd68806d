#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct Group;

// One row of an explicit composition table: g after f equals gf.
struct ComposeEntry {
  MorId g = 0;
  MorId f = 0;
  MorId gf = 0;
};

// Immutable finite groupoid with dense 0-based object and morphism ids.
//
// Source, target and identity data are always materialized, together with a
// hom index (morphism ids grouped by source, sorted by target). Composition
// and inversion go through a storage backend: small or deserialized groupoids
// carry explicit tables, while the big structured families (permutation
// towers, action groupoids, pullback apexes, disjoint sums) compute them from
// their defining data. An explicit table for the permutation tower at bound
// 10 would need ~10^13 entries, so backends are a necessity, not a luxury.
//
// Instances are heap-allocated and shared through GroupoidPtr; all factories
// return pointers. Morphism ids within one source block of the hom index are
// ascending, which several algorithms rely on for determinism.
class FiniteGroupoid {
 public:
  ~FiniteGroupoid();
  FiniteGroupoid(const FiniteGroupoid&) = delete;
  FiniteGroupoid& operator=(const FiniteGroupoid&) = delete;

  std::uint32_t num_objects() const { return n_objects_; }
  std::uint32_t num_morphisms() const { return static_cast<std::uint32_t>(src_.size()); }

  ObjId src(MorId m) const { return src_[m]; }
  ObjId tgt(MorId m) const { return tgt_[m]; }
  MorId identity(ObjId x) const { return identity_[x]; }

  MorId inverse(MorId m) const;

  // Empty when tgt(f) != src(g). Throws StructuralError if a table backend
  // is missing an entry for a composable pair.
  std::optional<MorId> compose(MorId g, MorId f) const;

  // Composition without the composability check; callers must guarantee
  // tgt(f) == src(g). Hot paths only.
  MorId compose_unchecked(MorId g, MorId f) const;

  // All morphisms with the given source, sorted by (target, id).
  std::span<const MorId> morphisms_from(ObjId x) const;

  // Morphisms x -> y, ascending ids.
  std::span<const MorId> hom(ObjId x, ObjId y) const;

  std::uint64_t aut_order(ObjId x) const { return hom(x, x).size(); }

  // True when the construction guarantees no two distinct objects are
  // isomorphic. False only means "unknown".
  bool skeletal_hint() const { return skeletal_hint_; }

  // Explicit tables. Validates id ranges, identity well-formedness, and that
  // every compose entry pairs tgt(f) == src(g); throws StructuralError
  // otherwise. Axiom checking is validate_groupoid's job. Pass skeletal_hint
  // only when the construction guarantees it.
  static GroupoidPtr from_tables(std::uint32_t n_objects, std::vector<ObjId> src,
                                 std::vector<ObjId> tgt, std::vector<MorId> identity,
                                 std::vector<MorId> inverse, std::vector<ComposeEntry> compose,
                                 bool skeletal_hint = false);

  // Objects 0..max_size, morphisms all permutations of each object's
  // underlying set {0..n-1}, identified by Lehmer rank within their block.
  // Throws BoundError when the morphism count would exceed the cap.
  static GroupoidPtr permutation_tower(std::uint32_t max_size,
                                       std::uint64_t morphism_cap = 20'000'000);

  // Same storage scheme with one block per entry of sizes; object i carries
  // the permutations of {0..sizes[i]-1}.
  static GroupoidPtr permutation_blocks(std::vector<std::uint32_t> sizes,
                                        std::uint64_t morphism_cap = 20'000'000);

  // Action groupoid: objects are carrier elements, morphism s*|G|+g runs
  // from s to g.s. The action table is action[g * carrier + s].
  static GroupoidPtr from_action(std::shared_ptr<const Group> group, std::uint32_t carrier,
                                 std::vector<std::uint32_t> action,
                                 std::uint64_t morphism_cap = 20'000'000);

  // Pullback-style groupoid whose morphisms carry a pair of parent
  // morphisms. Morphisms must arrive sorted by (src, left_part, right_part)
  // with one block per source object; composition and inversion are done
  // componentwise in the parents, locating the result by binary search.
  static GroupoidPtr pair_product(GroupoidPtr left_parent, GroupoidPtr right_parent,
                                  std::uint32_t n_objects, std::vector<ObjId> src,
                                  std::vector<ObjId> tgt, std::vector<MorId> identity,
                                  std::vector<MorId> left_part, std::vector<MorId> right_part,
                                  bool skeletal_hint);

  // Disjoint union; nested sums are flattened. Object and morphism ids are
  // offset part by part, in order.
  static GroupoidPtr disjoint_sum(std::vector<GroupoidPtr> parts);

 private:
  struct Backend;
  struct TableBackend;
  struct TowerBackend;
  struct ActionBackend;
  struct PairBackend;
  struct SumBackend;

  FiniteGroupoid();
  void finish_construction();  // builds the hom index

  std::uint32_t n_objects_ = 0;
  std::vector<ObjId> src_;
  std::vector<ObjId> tgt_;
  std::vector<MorId> identity_;
  std::vector<MorId> hom_order_;        // all morphism ids, by (src, tgt, id)
  std::vector<std::uint32_t> out_begin_;  // per-object offsets into hom_order_
  bool skeletal_hint_ = false;
  std::unique_ptr<const Backend> backend_;
};

// Isomorphism classes, i.e. connected components. reps holds the least
// object id of each class in ascending order; class_of maps objects to
// positions in reps.
struct ClassPartition {
  std::vector<ObjId> reps;
  std::vector<std::uint32_t> class_of;

  std::size_t size() const { return reps.size(); }
};

ClassPartition iso_classes(const FiniteGroupoid& g);

bool is_skeletal(const FiniteGroupoid& g);

// Sum over classes of 1/|Aut(rep)|.
Rational cardinality(const FiniteGroupoid& g);

// Same value computed object by object as sum of 1/#(morphisms out of x);
// cross-check route, no class computation involved.
Rational cardinality_by_sources(const FiniteGroupoid& g);

std::uint64_t composable_pair_count(const FiniteGroupoid& g);

struct ValidationLimits {
  std::uint64_t max_pairs = 5'000'000;
  std::uint64_t max_triples = 50'000'000;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;  // capped; first witnesses only
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;

  void note(std::string what);
};

// Checks the axioms through the public accessors: identity laws, inverse
// laws, totality on composable pairs, associativity. Throws BoundError when
// the pair or triple count exceeds the limits.
ValidationReport validate_groupoid(const FiniteGroupoid& g, const ValidationLimits& limits = {});

}  // namespace gpd
