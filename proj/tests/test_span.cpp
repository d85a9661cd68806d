#include <memory>
#include <vector>

#include "doctest.h"
#include "gpd/action.hpp"
#include "gpd/builders.hpp"
#include "gpd/degroupoidify.hpp"
#include "gpd/errors.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/oscillator.hpp"
#include "gpd/span.hpp"

using namespace gpd;

namespace {

std::shared_ptr<const Group> shared_group(Group g) {
  return std::make_shared<const Group>(std::move(g));
}

RationalMatrix mat(const ClassTable& t, const Span& s) { return matrix_of(t, t, s); }

RationalMatrix ladder_matrix(std::size_t n, bool lower) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (lower)
      m.at(k, k + 1) = Rational(static_cast<long>(k + 1));
    else
      m.at(k + 1, k) = Rational(1);
  }
  return m;
}

}  // namespace

TEST_CASE("weak pullback of the identity cospan on one group") {
  const GroupoidPtr g = group_groupoid(shared_group(symmetric_group(3)));
  const Functor id = identity_functor(g);
  const WeakPullback w = weak_pullback(id, id);
  CHECK(w.apex->num_objects() == 6);
  CHECK(w.apex->num_morphisms() == 216);
  CHECK(validate_groupoid(*w.apex).ok);
  CHECK(validate_functor(w.to_left).ok);
  CHECK(validate_functor(w.to_right).ok);
  CHECK(validate_natural_iso(w.square).ok);
  CHECK(cardinality(*w.apex) == Rational(1, 6));
  CHECK(cardinality_by_sources(*w.apex) == Rational(1, 6));
}

TEST_CASE("weak pullback over a point is the product") {
  const GroupoidPtr two = discrete_groupoid(2);
  const GroupoidPtr three = discrete_groupoid(3);
  const GroupoidPtr pt = terminal_groupoid();
  Functor f{two, pt, {0, 0}, {0, 0}};
  Functor g{three, pt, {0, 0, 0}, {0, 0, 0}};
  const WeakPullback w = weak_pullback(f, g);
  CHECK(w.apex->num_objects() == 6);
  CHECK(w.apex->num_morphisms() == 6);
  CHECK(cardinality(*w.apex) == Rational(6));
}

TEST_CASE("hom set orbits under translation") {
  const GroupoidPtr g = group_groupoid(shared_group(symmetric_group(3)));
  const auto homs = g->hom(0, 0);
  std::vector<MorId> all(homs.begin(), homs.end());
  const HomOrbits transitive = hom_orbits(*g, homs, all, {});
  REQUIRE(transitive.rep_pos.size() == 1);
  CHECK(transitive.rep_pos[0] == 0);
  CHECK(transitive.orbit_size[0] == 6);
  const HomOrbits still = hom_orbits(*g, homs, {}, {});
  CHECK(still.rep_pos.size() == 6);
  for (std::uint32_t s : still.orbit_size) CHECK(s == 1);
}

TEST_CASE("ladder span matrices over sizes up to three") {
  const Span lower = osc::annihilation_span(3);
  const Span raise = osc::creation_span(3);
  CHECK(validate_span(lower).ok);
  CHECK(validate_span(raise).ok);
  const ClassTable t = class_table(osc::fin_sets(3));
  REQUIRE(t.rows() == 4);
  CHECK(mat(t, lower) == ladder_matrix(4, true));
  CHECK(mat(t, raise) == ladder_matrix(4, false));
  CHECK(matrix_by_columns(t, t, lower) == ladder_matrix(4, true));
  CHECK(matrix_by_columns(t, t, raise) == ladder_matrix(4, false));
}

TEST_CASE("identity span gives the identity matrix") {
  const GroupoidPtr base = osc::fin_sets(3);
  const ClassTable t = class_table(base);
  const Span id = identity_span(base);
  CHECK(mat(t, id) == RationalMatrix::identity(4));
  const Span twice = compose_spans(id, id);
  CHECK(mat(t, twice) == RationalMatrix::identity(4));
}

TEST_CASE("composites match matrix products both ways") {
  const ClassTable t = class_table(osc::fin_sets(3));
  const Span lower = osc::annihilation_span(3);
  const Span raise = osc::creation_span(3);

  SpanOptions naive;
  naive.strategy = SpanOptions::Strategy::naive;
  SpanOptions reduced;
  reduced.strategy = SpanOptions::Strategy::reduced;

  const RationalMatrix ml = mat(t, lower);
  const RationalMatrix mr = mat(t, raise);

  for (const SpanOptions& opt : {SpanOptions{}, naive, reduced}) {
    const Span lower_raise = compose_spans(lower, raise, opt);
    const Span raise_lower = compose_spans(raise, lower, opt);
    CHECK(mat(t, lower_raise) == ml * mr);
    CHECK(mat(t, raise_lower) == mr * ml);
    CHECK(validate_span(lower_raise).ok);
    CHECK(validate_groupoid(*apex(lower_raise)).ok);
  }

  RationalMatrix diag_up(4, 4);  // raise then lower: counts n+1 until the top
  for (std::size_t n = 0; n + 1 < 4; ++n) diag_up.at(n, n) = Rational(static_cast<long>(n + 1));
  RationalMatrix diag_down(4, 4);  // lower then raise: counts n
  for (std::size_t n = 1; n < 4; ++n) diag_down.at(n, n) = Rational(static_cast<long>(n));
  CHECK(ml * mr == diag_up);
  CHECK(mr * ml == diag_down);
}

TEST_CASE("reduced composition agrees on a one object apex") {
  const GroupoidPtr x = group_groupoid(shared_group(symmetric_group(3)));
  const GroupoidOver state{identity_functor(x)};
  const Span up = span_of_state(state);          // from the point to x
  const Span down = adjoint_span(up);            // from x to the point
  SpanOptions reduced;
  reduced.strategy = SpanOptions::Strategy::reduced;
  const Span loop = compose_spans(down, up, reduced);
  CHECK(apex(loop)->num_objects() == 1);
  CHECK(apex(loop)->num_morphisms() == 6);
  const ClassTable pt = class_table(terminal_groupoid());
  CHECK(mat(pt, loop).at(0, 0) == Rational(1, 6));
  const Span loop_naive = compose_spans(down, up);
  CHECK(mat(pt, loop_naive).at(0, 0) == Rational(1, 6));
  CHECK(inner_product(state, state) == Rational(1, 6));
}

TEST_CASE("state application matches matrix action") {
  const std::uint32_t n = 3;
  const GroupoidPtr base = osc::fin_sets(n);
  const ClassTable t = class_table(base);
  const Span lower = osc::annihilation_span(n);

  const GroupoidOver psi2 = osc::number_state(2, n);
  CHECK(vector_of(t, psi2) == RationalVector{Rational(0), Rational(0), Rational(1, 2), Rational(0)});
  const GroupoidOver lowered = apply_span(lower, psi2);
  CHECK(vector_of(t, lowered) == RationalVector{Rational(0), Rational(1), Rational(0), Rational(0)});

  const GroupoidOver everything{identity_functor(base)};
  const RationalVector v = vector_of(t, everything);
  CHECK(v == RationalVector{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)});
  CHECK(mat(t, lower) * v == vector_of(t, apply_span(lower, everything)));
  CHECK(mat(t, osc::creation_span(n)) * v ==
        vector_of(t, apply_span(osc::creation_span(n), everything)));
}

TEST_CASE("sum and scale act linearly on matrices") {
  const ClassTable t = class_table(osc::fin_sets(3));
  const Span lower = osc::annihilation_span(3);
  const Span raise = osc::creation_span(3);
  CHECK(mat(t, sum_spans(lower, raise)) == mat(t, lower) + mat(t, raise));
  CHECK(mat(t, scale_span(3, lower)) == mat(t, lower) * Rational(3));
  CHECK(validate_span(scale_span(3, lower)).ok);
}

TEST_CASE("commutation report at small truncation") {
  const osc::CommutationReport rep = osc::verify_commutation(3);
  CHECK(rep.annihilate == ladder_matrix(4, true));
  CHECK(rep.create == ladder_matrix(4, false));
  CHECK(rep.agree_rows == 3);
  CHECK(rep.block_verified);
  CHECK(rep.raise_then_lower.at(3, 3) == Rational(0));
  CHECK(rep.lower_then_raise_plus_one.at(3, 3) == Rational(4));
  CHECK(rep.excluded_band.find("3") != std::string::npos);
}

TEST_CASE("forced reduced composition rejects non skeletal apexes") {
  const Group s2 = symmetric_group(2);
  GroupAction swap_action{shared_group(s2), 2, {0, 1, 1, 0}};
  const GroupoidPtr act = action_groupoid(swap_action);
  REQUIRE_FALSE(is_skeletal(*act));

  Functor to_point{act, terminal_groupoid(), std::vector<ObjId>(2, 0),
                   std::vector<MorId>(act->num_morphisms(), 0)};
  const Span s{to_point, to_point};
  SpanOptions reduced;
  reduced.strategy = SpanOptions::Strategy::reduced;
  CHECK_THROWS_AS(compose_spans(s, s, reduced), DomainError);

  const ClassTable pt = class_table(terminal_groupoid());
  CHECK(mat(pt, compose_spans(s, s)).at(0, 0) == Rational(1));
  CHECK(mat(pt, s).at(0, 0) == Rational(1));
}

TEST_CASE("caps stop oversized compositions") {
  const Span lower = osc::annihilation_span(3);
  const Span raise = osc::creation_span(3);
  SpanOptions tiny;
  tiny.cap = 2;
  CHECK_THROWS_AS(compose_spans(lower, raise, tiny), BoundError);
  SpanOptions tiny_naive;
  tiny_naive.cap = 2;
  tiny_naive.strategy = SpanOptions::Strategy::naive;
  CHECK_THROWS_AS(compose_spans(lower, raise, tiny_naive), BoundError);
}

TEST_CASE("span validation flags mismatched legs") {
  Span bad;
  bad.left = identity_functor(osc::fin_sets(2));
  bad.right = identity_functor(osc::fin_sets(3));
  CHECK_FALSE(validate_span(bad).ok);
}
