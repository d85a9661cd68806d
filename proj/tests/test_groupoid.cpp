#include <memory>

#include "doctest.h"
#include "gpd/action.hpp"
#include "gpd/builders.hpp"
#include "gpd/errors.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/perm.hpp"

using namespace gpd;

namespace {

std::shared_ptr<const Group> shared_group(Group g) {
  return std::make_shared<const Group>(std::move(g));
}

void check_valid(const FiniteGroupoid& g) {
  const ValidationReport rep = validate_groupoid(g);
  if (!rep.ok) {
    for (const auto& v : rep.violations) MESSAGE(v);
  }
  CHECK(rep.ok);
}

}  // namespace

TEST_CASE("terminal and discrete groupoids") {
  const auto pt = terminal_groupoid();
  CHECK(pt->num_objects() == 1);
  CHECK(pt->num_morphisms() == 1);
  check_valid(*pt);
  CHECK(cardinality(*pt) == Rational(1));

  const auto d = discrete_groupoid(5);
  check_valid(*d);
  CHECK(cardinality(*d) == Rational(5));
  CHECK(cardinality_by_sources(*d) == Rational(5));
  CHECK(is_skeletal(*d));
}

TEST_CASE("one-object groupoid on a symmetric group") {
  const auto g = group_groupoid(shared_group(symmetric_group(3)));
  check_valid(*g);
  CHECK(g->num_morphisms() == 6);
  CHECK(cardinality(*g) == Rational(1, 6));
  CHECK(cardinality_by_sources(*g) == Rational(1, 6));
  CHECK(g->aut_order(0) == 6);
}

TEST_CASE("group table validators") {
  CHECK_NOTHROW(validate_group(symmetric_group(4)));
  CHECK_NOTHROW(validate_group(cyclic_group(7)));
  Group broken = cyclic_group(4);
  broken.inv[1] = 1;  // wrong inverse
  CHECK_THROWS_AS(validate_group(broken), DomainError);
}

TEST_CASE("permutation tower small: cardinality approaches e") {
  const auto e3 = FiniteGroupoid::permutation_tower(3);
  check_valid(*e3);
  CHECK(e3->num_objects() == 4);
  CHECK(e3->num_morphisms() == 1 + 1 + 2 + 6);
  CHECK(cardinality(*e3) == Rational(8, 3));
  CHECK(cardinality_by_sources(*e3) == Rational(8, 3));
  CHECK(is_skeletal(*e3));

  const auto e4 = FiniteGroupoid::permutation_tower(4);
  check_valid(*e4);
  CHECK(cardinality(*e4) == Rational(65, 24));
}

TEST_CASE("permutation tower at bound 10") {
  const auto e10 = FiniteGroupoid::permutation_tower(10);
  CHECK(e10->num_morphisms() == 4037914);  // sum of n! for n <= 10
  CHECK(e10->aut_order(10) == 3628800);
  // Frozen value of sum over n <= 10 of 1/n!.
  CHECK(cardinality(*e10) == Rational(9864101, 3628800));
  CHECK(cardinality_by_sources(*e10) == Rational(9864101, 3628800));

  CHECK_THROWS_AS(FiniteGroupoid::permutation_tower(11), BoundError);
}

TEST_CASE("tower composition through the uncached path agrees with direct arithmetic") {
  const auto e9 = FiniteGroupoid::permutation_tower(9);
  const MorId base = e9->identity(9);  // first morphism of the size-9 block
  const std::uint64_t ra = 123456, rb = 298765;
  const MorId a = base + static_cast<MorId>(ra);
  const MorId b = base + static_cast<MorId>(rb);
  const auto ab = e9->compose(a, b);
  REQUIRE(ab.has_value());
  const std::uint64_t expect = perm_rank(perm_compose(perm_unrank(9, ra), perm_unrank(9, rb)));
  CHECK(*ab == base + static_cast<MorId>(expect));
  CHECK(e9->inverse(a) == base + static_cast<MorId>(perm_rank(perm_inverse(perm_unrank(9, ra)))));
  CHECK(e9->compose(e9->inverse(a), a).value() == e9->identity(9));
}

TEST_CASE("permutation blocks with repeated sizes are still disconnected") {
  const auto two = FiniteGroupoid::permutation_blocks({4, 4});
  check_valid(*two);
  CHECK(two->num_objects() == 2);
  CHECK(two->hom(0, 1).empty());
  CHECK(cardinality(*two) == Rational(1, 12));
  CHECK(is_skeletal(*two));
}

TEST_CASE("action groupoid of the natural action") {
  Group s3 = symmetric_group(3);
  GroupAction act;
  act.group = shared_group(std::move(s3));
  act.carrier = 3;
  act.map.resize(6 * 3);
  for (std::uint32_t g = 0; g < 6; ++g) {
    const Perm p = perm_unrank(3, g);
    for (std::uint32_t s = 0; s < 3; ++s) act.map[g * 3 + s] = p[s];
  }
  CHECK_NOTHROW(validate_action(act));

  const auto q = action_groupoid(act);
  check_valid(*q);
  CHECK(q->num_objects() == 3);
  CHECK(q->num_morphisms() == 18);
  // One orbit with point stabilizers of order 2: carrier size over group order.
  CHECK(cardinality(*q) == Rational(1, 2));
  CHECK(cardinality_by_sources(*q) == Rational(1, 2));
  CHECK(iso_classes(*q).size() == 1);

  SUBCASE("skeleton collapses the orbit") {
    const SkeletonResult sk = skeletonize(q);
    CHECK(sk.skeleton->num_objects() == 1);
    CHECK(sk.skeleton->aut_order(0) == 2);
    CHECK(cardinality(*sk.skeleton) == Rational(1, 2));
    check_valid(*sk.skeleton);
    CHECK(validate_functor(sk.include).ok);
    CHECK(validate_functor(sk.retract).ok);
    CHECK(validate_natural_iso(sk.unit).ok);
    CHECK(check_equivalence(sk.include).ok());
    // Retract after include is the identity of the skeleton on the nose.
    const Functor ri = compose_functors(sk.retract, sk.include);
    const Functor id = identity_functor(sk.skeleton);
    CHECK(ri.obj == id.obj);
    CHECK(ri.mor == id.mor);
  }
}

TEST_CASE("trivial action records the full group as automorphisms") {
  GroupAction act;
  act.group = shared_group(cyclic_group(4));
  act.carrier = 1;
  act.map.assign(4, 0);
  const auto q = action_groupoid(act);
  check_valid(*q);
  CHECK(cardinality(*q) == Rational(1, 4));
}

TEST_CASE("coproduct adds cardinalities") {
  const auto a = discrete_groupoid(2);
  const auto b = group_groupoid(shared_group(cyclic_group(2)));
  const CoproductResult sum = coproduct_groupoid({a, b});
  check_valid(*sum.groupoid);
  CHECK(cardinality(*sum.groupoid) == Rational(5, 2));
  CHECK(validate_functor(sum.inject[0]).ok);
  CHECK(validate_functor(sum.inject[1]).ok);

  SUBCASE("nested sums flatten but keep numbering") {
    const CoproductResult nested = coproduct_groupoid({sum.groupoid, a});
    check_valid(*nested.groupoid);
    CHECK(cardinality(*nested.groupoid) == Rational(9, 2));
    CHECK(nested.groupoid->num_objects() == 5);
    CHECK(validate_functor(nested.inject[1]).ok);
  }
}

TEST_CASE("product multiplies cardinalities") {
  const auto a = FiniteGroupoid::permutation_tower(2);  // cardinality 5/2
  const auto b = group_groupoid(shared_group(cyclic_group(3)));
  const ProductResult prod = product_groupoid(a, b);
  check_valid(*prod.groupoid);
  CHECK(cardinality(*prod.groupoid) == Rational(5, 6));
  CHECK(validate_functor(prod.proj_left).ok);
  CHECK(validate_functor(prod.proj_right).ok);
}

TEST_CASE("full subgroupoid keeps chosen objects") {
  const auto e3 = FiniteGroupoid::permutation_tower(3);
  const SubgroupoidResult sub = full_subgroupoid(e3, {2, 3});
  check_valid(*sub.groupoid);
  CHECK(sub.groupoid->num_objects() == 2);
  CHECK(cardinality(*sub.groupoid) == Rational(2, 3));
  CHECK(validate_functor(sub.include).ok);
  CHECK(check_equivalence(sub.include).full);
  CHECK(check_equivalence(sub.include).faithful);
  CHECK_FALSE(check_equivalence(sub.include).essentially_surjective);
}

TEST_CASE("skeletonize is the identity on skeletal input") {
  const auto e3 = FiniteGroupoid::permutation_tower(3);
  const SkeletonResult sk = skeletonize(e3);
  CHECK(sk.skeleton.get() == e3.get());
}

TEST_CASE("validation flags corrupted tables") {
  // Z/2 with a corrupted table: the entry for 1*1 claims 1 instead of 0.
  std::vector<ComposeEntry> compose = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  const auto g = FiniteGroupoid::from_tables(1, {0, 0}, {0, 0}, {0}, {0, 1}, std::move(compose));
  const ValidationReport rep = validate_groupoid(*g);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("structurally malformed tables are rejected at construction") {
  CHECK_THROWS_AS(FiniteGroupoid::from_tables(1, {0}, {1}, {0}, {0}, {}), StructuralError);
  CHECK_THROWS_AS(FiniteGroupoid::from_tables(2, {0, 1}, {0, 1}, {0}, {0, 1}, {}), StructuralError);
  // Compose entry pairing non-composable morphisms.
  CHECK_THROWS_AS(FiniteGroupoid::from_tables(2, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {{0, 1, 0}}),
                  StructuralError);
  // Duplicate compose entry.
  CHECK_THROWS_AS(
      FiniteGroupoid::from_tables(1, {0}, {0}, {0}, {0}, {{0, 0, 0}, {0, 0, 0}}),
      StructuralError);
}

TEST_CASE("composable pair count matches enumeration") {
  const auto e3 = FiniteGroupoid::permutation_tower(3);
  CHECK(composable_pair_count(*e3) == 1 + 1 + 4 + 36);
}
