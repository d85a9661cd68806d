#include <cstdint>
#include <memory>

#include "doctest.h"
#include "gpd/builders.hpp"
#include "gpd/degroupoidify.hpp"
#include "gpd/errors.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/oscillator.hpp"
#include "gpd/perm.hpp"
#include "gpd/span.hpp"

using namespace gpd;

TEST_CASE("class tables over size towers") {
  const ClassTable t = class_table(osc::fin_sets(3));
  REQUIRE(t.rows() == 4);
  CHECK(t.aut == std::vector<std::uint64_t>{1, 1, 2, 6});
  for (ObjId n = 0; n < 4; ++n) CHECK(t.row_of(n) == n);
}

TEST_CASE("point states and their vectors") {
  const GroupoidPtr base = osc::fin_sets(3);
  const ClassTable t = class_table(base);
  const GroupoidOver at2 = point_state(base, 2);
  CHECK(vector_of(t, at2) ==
        RationalVector{Rational(0), Rational(0), Rational(1, 2), Rational(0)});
  CHECK(vector_of(t, osc::number_state(2, 3)) == vector_of(t, at2));
  CHECK_THROWS_AS(point_state(base, 9), DomainError);
}

TEST_CASE("vector entries add up to the total cardinality") {
  const GroupoidPtr base = osc::fin_sets(4);
  const ClassTable t = class_table(base);
  const GroupoidOver everything{identity_functor(base)};
  const RationalVector v = vector_of(t, everything);
  Rational sum;
  for (const Rational& x : v) sum += x;
  CHECK(sum == cardinality(*base));
  CHECK(sum == Rational(65, 24));
}

TEST_CASE("two colored sets double every degree") {
  const GroupoidOver colored = osc::two_colored_state(3);
  CHECK(validate_groupoid(*colored.projection.source).ok);
  CHECK(validate_functor(colored.projection).ok);
  CHECK(colored.projection.source->num_objects() == 15);
  CHECK(colored.projection.source->num_morphisms() == 59);

  const ClassTable t = class_table(osc::fin_sets(3));
  const RationalVector v = vector_of(t, colored);
  CHECK(v == RationalVector{Rational(1), Rational(2), Rational(2), Rational(4, 3)});
  CHECK(generating_function(t, colored, 3) == v);
  CHECK_THROWS_AS(generating_function(t, colored, 4), DomainError);
}

TEST_CASE("two colored fibers match binomial classes") {
  const GroupoidOver colored = osc::two_colored_state(4);
  for (ObjId n = 0; n <= 4; ++n) {
    const SubgroupoidResult fiber = essential_preimage(colored, n);
    CHECK(fiber.groupoid->num_objects() == (1u << n));
    CHECK(iso_classes(*fiber.groupoid).reps.size() == n + 1);
    CHECK(cardinality(*fiber.groupoid) ==
          Rational(std::int64_t{1} << n, static_cast<std::int64_t>(factorial(n))));
  }
}

TEST_CASE("lowering the two colored state doubles it") {
  const ClassTable t = class_table(osc::fin_sets(3));
  const GroupoidOver colored = osc::two_colored_state(3);
  const Span lower = osc::annihilation_span(3);
  const RationalVector image = vector_of(t, apply_span(lower, colored));
  CHECK(image == matrix_of(t, t, lower) * vector_of(t, colored));
  CHECK(image ==
        RationalVector{Rational(2), Rational(4), Rational(4), Rational(0)});
}

TEST_CASE("inner products agree with the pairing and the pullback") {
  const GroupoidPtr base = osc::fin_sets(3);
  const ClassTable t = class_table(base);
  const GroupoidOver colored = osc::two_colored_state(3);
  const GroupoidOver psi2 = osc::number_state(2, 3);

  const Rational direct = inner_product(colored, psi2);
  CHECK(direct == Rational(2));
  CHECK(direct == pairing(t, vector_of(t, colored), vector_of(t, psi2)));
  CHECK(direct == cardinality(*inner_product_pullback(colored, psi2).apex));

  CHECK(inner_product(psi2, psi2) == Rational(1, 2));
  CHECK(inner_product(psi2, osc::number_state(3, 3)) == Rational(0));
}

TEST_CASE("inner products over the point square the cardinality") {
  const GroupoidPtr pt = terminal_groupoid();
  const GroupoidPtr tower = osc::fin_sets(3);
  GroupoidOver over;
  over.projection.source = tower;
  over.projection.target = pt;
  over.projection.obj.assign(tower->num_objects(), 0);
  over.projection.mor.assign(tower->num_morphisms(), 0);

  const Rational value = inner_product(over, over);
  CHECK(value == Rational(64, 9));
  const ClassTable t = class_table(pt);
  CHECK(value == pairing(t, vector_of(t, over), vector_of(t, over)));
  CHECK(value == cardinality(*inner_product_pullback(over, over).apex));
}

TEST_CASE("matrices by columns match the direct form on composites") {
  const ClassTable t = class_table(osc::fin_sets(3));
  const Span lower = osc::annihilation_span(3);
  const Span raise = osc::creation_span(3);
  const Span lower_raise = compose_spans(lower, raise);
  CHECK(matrix_by_columns(t, t, lower_raise) == matrix_of(t, t, lower_raise));
  const Span sum = sum_spans(lower_raise, identity_span(t.base));
  CHECK(matrix_by_columns(t, t, sum) == matrix_of(t, t, sum));
}

TEST_CASE("pairing rejects mismatched dimensions") {
  const ClassTable t = class_table(osc::fin_sets(2));
  CHECK_THROWS_AS(pairing(t, RationalVector(2), RationalVector(3)), DomainError);
}
