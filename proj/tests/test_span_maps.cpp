#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "gpd/builders.hpp"
#include "gpd/degroupoidify.hpp"
#include "gpd/errors.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/oscillator.hpp"
#include "gpd/span.hpp"
#include "gpd/span_maps.hpp"
#include "support/equiv_search.hpp"

using namespace gpd;

namespace {

std::shared_ptr<const Group> shared_group(Group g) {
  return std::make_shared<const Group>(std::move(g));
}

RationalMatrix mat(const ClassTable& t, const Span& s) { return matrix_of(t, t, s); }

SpanMap identity_span_map(const Span& s) {
  SpanMap m;
  m.functor = identity_functor(apex(s));
  m.left_leg = identity_iso(s.left);
  m.right_leg = identity_iso(s.right);
  return m;
}

Span compose_naive(const Span& second, const Span& first, WeakPullback* out_wpb = nullptr) {
  WeakPullback w = weak_pullback(first.left, second.right);
  Span s;
  s.right = compose_functors(first.right, w.to_left);
  s.left = compose_functors(second.left, w.to_right);
  if (out_wpb) *out_wpb = std::move(w);
  return s;
}

}  // namespace

TEST_CASE("identity span map passes the checks") {
  const Span lower = osc::annihilation_span(3);
  const SpanMap m = identity_span_map(lower);
  CHECK(check_span_map(lower, lower, m).ok);

  SpanEquivalence e;
  e.forward = m;
  e.backward = m;
  e.unit.from = compose_functors(m.functor, m.functor);
  e.unit.to = identity_functor(apex(lower));
  e.unit.component.resize(apex(lower)->num_objects());
  for (ObjId x = 0; x < apex(lower)->num_objects(); ++x)
    e.unit.component[x] = apex(lower)->identity(x);
  CHECK(check_span_equivalence(lower, lower, e).ok);
}

TEST_CASE("span map checks catch mismatched endpoints") {
  const Span lower = osc::annihilation_span(3);
  const Span raise = osc::creation_span(3);
  SpanMap m = identity_span_map(lower);
  const ValidationReport rep = check_span_map(lower, raise, m);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
}

TEST_CASE("collapsing a groupoid onto a point is not a span equivalence") {
  const GroupoidPtr pt = terminal_groupoid();
  const GroupoidPtr two = discrete_groupoid(2);

  Span one_obj;
  one_obj.left = identity_functor(pt);
  one_obj.right = identity_functor(pt);

  Span two_obj;
  two_obj.left.source = two;
  two_obj.left.target = pt;
  two_obj.left.obj = {0, 0};
  two_obj.left.mor = {0, 0};
  two_obj.right = two_obj.left;

  SpanEquivalence e;
  e.forward.functor.source = pt;
  e.forward.functor.target = two;
  e.forward.functor.obj = {0};
  e.forward.functor.mor = {two->identity(0)};
  e.forward.left_leg = identity_iso(one_obj.left);
  e.forward.right_leg = identity_iso(one_obj.right);
  e.backward.functor.source = two;
  e.backward.functor.target = pt;
  e.backward.functor.obj = {0, 0};
  e.backward.functor.mor = {0, 0};
  e.backward.left_leg = identity_iso(two_obj.left);
  e.backward.right_leg = identity_iso(two_obj.right);
  e.unit.from = compose_functors(e.backward.functor, e.forward.functor);
  e.unit.to = identity_functor(pt);
  e.unit.component = {0};

  CHECK(check_span_map(one_obj, two_obj, e.forward).ok);
  const ValidationReport rep = check_span_equivalence(one_obj, two_obj, e);
  CHECK_FALSE(rep.ok);
  bool mentions_equivalence = false;
  for (const auto& v : rep.violations)
    if (v.find("equivalence") != std::string::npos) mentions_equivalence = true;
  CHECK(mentions_equivalence);
}

TEST_CASE("a twisted leg iso breaks the unit triangles") {
  const Span lower = osc::annihilation_span(2);
  SpanEquivalence e;
  e.forward = identity_span_map(lower);
  e.backward = e.forward;
  e.unit.from = compose_functors(e.forward.functor, e.forward.functor);
  e.unit.to = identity_functor(apex(lower));
  e.unit.component.resize(apex(lower)->num_objects());
  for (ObjId x = 0; x < apex(lower)->num_objects(); ++x)
    e.unit.component[x] = apex(lower)->identity(x);
  REQUIRE(check_span_equivalence(lower, lower, e).ok);

  // The right leg sends apex object 1 to the two-element set, which has a
  // non-identity automorphism; using it as the iso component is still a
  // valid natural iso but can no longer close up to the identity.
  const FiniteGroupoid& base = *lower.right.target;
  const ObjId foot = lower.right.obj[1];
  REQUIRE(base.hom(foot, foot).size() == 2);
  e.forward.right_leg.component[1] = base.hom(foot, foot)[1];
  REQUIRE(validate_natural_iso(e.forward.right_leg).ok);
  const ValidationReport rep = check_span_equivalence(lower, lower, e);
  CHECK_FALSE(rep.ok);
  bool mentions_right = false;
  for (const auto& v : rep.violations)
    if (v.find("right leg triangle") != std::string::npos) mentions_right = true;
  CHECK(mentions_right);
}

TEST_CASE("bloating apex objects preserves the matrix") {
  const Span lower = osc::annihilation_span(3);
  const ClassTable t = class_table(osc::fin_sets(3));
  const BloatedSpan big = bloat_span(lower, {2, 1, 3});

  CHECK(validate_groupoid(*apex(big.span)).ok);
  CHECK(validate_span(big.span).ok);
  CHECK(apex(big.span)->num_objects() == 6);
  CHECK(check_span_equivalence(big.span, lower, big.witness).ok);
  CHECK(mat(t, big.span) == mat(t, lower));
  CHECK(testsupport::equivalent_groupoids(*apex(big.span), *apex(lower)));

  CHECK_THROWS_AS(bloat_span(lower, {2, 1}), StructuralError);
  CHECK_THROWS_AS(bloat_span(lower, {2, 0, 1}), DomainError);
}

TEST_CASE("reassociating composites is a span equivalence") {
  const Span r = osc::annihilation_span(3);
  const Span s = osc::creation_span(3);
  const Span t = osc::annihilation_span(3);
  const ClassTable table = class_table(osc::fin_sets(3));

  WeakPullback w1, w2, w3, w4;
  const Span sr = compose_naive(s, r, &w1);
  const Span t_sr = compose_naive(t, sr, &w2);
  const Span ts = compose_naive(t, s, &w3);
  const Span ts_r = compose_naive(ts, r, &w4);
  REQUIRE(mat(table, t_sr) == mat(table, ts_r));

  // Index the right-associated apex by its defining triples.
  std::map<std::tuple<ObjId, ObjId, MorId>, ObjId> obj3;
  for (ObjId o = 0; o < w3.apex->num_objects(); ++o)
    obj3[{w3.obj_left[o], w3.obj_right[o], w3.obj_witness[o]}] = o;
  std::map<std::tuple<ObjId, ObjId, MorId>, ObjId> obj4;
  for (ObjId o = 0; o < w4.apex->num_objects(); ++o)
    obj4[{w4.obj_left[o], w4.obj_right[o], w4.obj_witness[o]}] = o;
  std::map<std::tuple<ObjId, MorId, MorId>, MorId> mor3;
  for (MorId m = 0; m < w3.apex->num_morphisms(); ++m)
    mor3[{w3.apex->src(m), w3.to_left.mor[m], w3.to_right.mor[m]}] = m;
  std::map<std::tuple<ObjId, MorId, MorId>, MorId> mor4;
  for (MorId m = 0; m < w4.apex->num_morphisms(); ++m)
    mor4[{w4.apex->src(m), w4.to_left.mor[m], w4.to_right.mor[m]}] = m;

  // (t after (s after r)) apex object: ((r-obj, s-obj, alpha), t-obj, beta)
  // goes to (r-obj, (s-obj, t-obj, beta), alpha).
  Functor phi;
  phi.source = w2.apex;
  phi.target = w4.apex;
  phi.obj.resize(w2.apex->num_objects());
  for (ObjId o = 0; o < w2.apex->num_objects(); ++o) {
    const ObjId sr_obj = w2.obj_left[o];
    const ObjId t_obj = w2.obj_right[o];
    const MorId beta = w2.obj_witness[o];
    const ObjId r_obj = w1.obj_left[sr_obj];
    const ObjId s_obj = w1.obj_right[sr_obj];
    const MorId alpha = w1.obj_witness[sr_obj];
    phi.obj[o] = obj4.at({r_obj, obj3.at({s_obj, t_obj, beta}), alpha});
  }
  phi.mor.resize(w2.apex->num_morphisms());
  for (MorId m = 0; m < w2.apex->num_morphisms(); ++m) {
    const MorId sr_mor = w2.to_left.mor[m];
    const MorId t_mor = w2.to_right.mor[m];
    const MorId r_mor = w1.to_left.mor[sr_mor];
    const MorId s_mor = w1.to_right.mor[sr_mor];
    const ObjId src = phi.obj[w2.apex->src(m)];
    const MorId ts_mor = mor3.at({w4.to_right.obj[src], s_mor, t_mor});
    phi.mor[m] = mor4.at({src, r_mor, ts_mor});
  }
  REQUIRE(validate_functor(phi).ok);

  Functor psi;
  psi.source = w4.apex;
  psi.target = w2.apex;
  psi.obj.resize(w4.apex->num_objects());
  psi.mor.resize(w4.apex->num_morphisms());
  for (ObjId o = 0; o < w2.apex->num_objects(); ++o) psi.obj[phi.obj[o]] = o;
  for (MorId m = 0; m < w2.apex->num_morphisms(); ++m) psi.mor[phi.mor[m]] = m;
  REQUIRE(validate_functor(psi).ok);

  SpanEquivalence e;
  e.forward.functor = phi;
  e.forward.left_leg = identity_iso(t_sr.left);
  e.forward.right_leg = identity_iso(t_sr.right);
  e.backward.functor = psi;
  e.backward.left_leg = identity_iso(ts_r.left);
  e.backward.right_leg = identity_iso(ts_r.right);
  e.unit.from = compose_functors(psi, phi);
  e.unit.to = identity_functor(w2.apex);
  e.unit.component.resize(w2.apex->num_objects());
  for (ObjId x = 0; x < w2.apex->num_objects(); ++x)
    e.unit.component[x] = w2.apex->identity(x);
  CHECK(check_span_equivalence(t_sr, ts_r, e).ok);
}

TEST_CASE("adjoints transpose composites sums and scalars") {
  const Span lower = osc::annihilation_span(3);
  const Span raise = osc::creation_span(3);
  const ClassTable t = class_table(osc::fin_sets(3));

  CHECK(mat(t, adjoint_span(compose_spans(lower, raise))) ==
        mat(t, compose_spans(adjoint_span(raise), adjoint_span(lower))));
  CHECK(mat(t, adjoint_span(sum_spans(lower, raise))) ==
        mat(t, adjoint_span(lower)) + mat(t, adjoint_span(raise)));
  CHECK(mat(t, adjoint_span(scale_span(3, lower))) ==
        mat(t, adjoint_span(lower)) * Rational(3));
}

TEST_CASE("states pair with spans through the adjoint") {
  const Span lower = osc::annihilation_span(3);
  const GroupoidOver colored = osc::two_colored_state(3);
  const GroupoidOver psi1 = osc::number_state(1, 3);

  const Rational lhs = inner_product(psi1, apply_span(lower, colored));
  const Rational rhs = inner_product(apply_span(adjoint_span(lower), psi1), colored);
  CHECK(lhs == Rational(4));
  CHECK(lhs == rhs);
}

TEST_CASE("inner products are symmetric and respect sums and scalars") {
  const GroupoidOver colored = osc::two_colored_state(3);
  const GroupoidOver psi2 = osc::number_state(2, 3);
  const GroupoidOver psi3 = osc::number_state(3, 3);

  CHECK(inner_product(colored, psi2) == inner_product(psi2, colored));
  CHECK(inner_product(colored, sum_states(psi2, psi3)) ==
        inner_product(colored, psi2) + inner_product(colored, psi3));
  CHECK(inner_product(colored, scale_state(3, psi2)) ==
        inner_product(colored, psi2) * Rational(3));

  const GroupoidPtr half = group_groupoid(shared_group(symmetric_group(2)));
  CHECK(cardinality(*half) == Rational(1, 2));
  CHECK(inner_product(colored, scale_state(half, psi2)) ==
        inner_product(colored, psi2) * Rational(1, 2));
}

TEST_CASE("scaling a span by a groupoid scales its matrix") {
  const Span lower = osc::annihilation_span(3);
  const ClassTable t = class_table(osc::fin_sets(3));
  const GroupoidPtr half = group_groupoid(shared_group(symmetric_group(2)));
  CHECK(mat(t, scale_span(half, lower)) == mat(t, lower) * Rational(1, 2));
  const GroupoidPtr three = discrete_groupoid(3);
  CHECK(mat(t, scale_span(three, lower)) == mat(t, lower) * Rational(3));
}

TEST_CASE("pullback cardinality only sees cospans up to equivalence") {
  const Span r = osc::annihilation_span(3);
  const Span s = osc::creation_span(3);
  const BloatedSpan big = bloat_span(r, {1, 2, 2});

  const Rational plain = cardinality(*weak_pullback(Cospan{r.left, s.right}).apex);
  const Rational bloated = cardinality(*weak_pullback(Cospan{big.span.left, s.right}).apex);
  CHECK(plain == bloated);
}

TEST_CASE("restriction to an essential preimage keeps the fiber cardinality") {
  const Span lower = osc::annihilation_span(3);
  const BloatedSpan big = bloat_span(lower, {3, 1, 2});
  const GroupoidOver over_plain{lower.left};
  const GroupoidOver over_big{big.span.left};
  for (ObjId x = 0; x < 4; ++x)
    CHECK(cardinality(*essential_preimage(over_plain, x).groupoid) ==
          cardinality(*essential_preimage(over_big, x).groupoid));
}

TEST_CASE("exhaustive search separates inequivalent small groupoids") {
  const GroupoidPtr two = discrete_groupoid(2);
  const GroupoidPtr half = group_groupoid(shared_group(symmetric_group(2)));
  CHECK(testsupport::equivalent_groupoids(*two, *two));
  CHECK_FALSE(testsupport::equivalent_groupoids(*two, *half));
  CHECK_FALSE(testsupport::equivalent_groupoids(*two, *terminal_groupoid()));

  const GroupoidPtr z4 = group_groupoid(shared_group(cyclic_group(4)));
  const GroupoidPtr s3 = group_groupoid(shared_group(symmetric_group(3)));
  CHECK_FALSE(testsupport::equivalent_groupoids(*z4, *s3));
  CHECK(testsupport::equivalent_groupoids(*z4, *z4));

  const SkeletonResult sk = skeletonize(coproduct_groupoid({half, half}).groupoid);
  CHECK(testsupport::equivalent_groupoids(*sk.skeleton, *coproduct_groupoid({half, half}).groupoid));
}

TEST_CASE("naive and reduced composites have equivalent apexes") {
  const Span lower = osc::annihilation_span(2);
  const Span raise = osc::creation_span(2);
  SpanOptions naive;
  naive.strategy = SpanOptions::Strategy::naive;
  SpanOptions reduced;
  reduced.strategy = SpanOptions::Strategy::reduced;
  const Span a = compose_spans(lower, raise, naive);
  const Span b = compose_spans(lower, raise, reduced);
  CHECK(testsupport::equivalent_groupoids(*apex(a), *apex(b)));
  const Span c = compose_spans(raise, lower, naive);
  const Span d = compose_spans(raise, lower, reduced);
  CHECK(testsupport::equivalent_groupoids(*apex(c), *apex(d)));
}
