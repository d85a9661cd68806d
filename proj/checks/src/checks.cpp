#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gpd/builders.hpp"
#include "gpd/checks.hpp"
#include "gpd/degroupoidify.hpp"
#include "gpd/feynman.hpp"
#include "gpd/group.hpp"
#include "gpd/hecke_algebra.hpp"
#include "gpd/hecke_geometry.hpp"
#include "gpd/hecke_orbits.hpp"
#include "gpd/normal_order.hpp"
#include "gpd/oscillator.hpp"
#include "gpd/perm.hpp"
#include "gpd/span_maps.hpp"

namespace gpd::checks {

namespace {

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

RationalMatrix square_matrix(const ClassTable& t, const Span& s) { return matrix_of(t, t, s); }

GroupoidPtr two_element_action(std::uint32_t carrier, std::uint32_t swapped_pairs) {
  const auto z2 = std::make_shared<const Group>(cyclic_group(2));
  std::vector<std::uint32_t> action(2 * carrier);
  for (std::uint32_t s = 0; s < carrier; ++s) {
    action[s] = s;
    std::uint32_t image = s;
    if (s < 2 * swapped_pairs) image = s ^ 1u;
    action[carrier + s] = image;
  }
  return FiniteGroupoid::from_action(z2, carrier, std::move(action));
}

}  // namespace

CheckResult check_tower_cardinality() {
  const std::string name = "truncated tower cardinality";
  const GroupoidPtr tower = osc::fin_sets(10);
  const Rational have = cardinality(*tower);
  Rational want(0);
  for (std::uint32_t n = 0; n <= 10; ++n) want = want + Rational::unit_fraction(factorial(n));
  if (have != want) return fail(name, "tower gives " + have.str() + ", sum gives " + want.str());
  if (have != Rational(9864101, 3628800)) return fail(name, "sum drifted from 9864101/3628800");
  return pass(name, "bound 10 cardinality " + have.str());
}

CheckResult check_action_cardinalities() {
  const std::string name = "action groupoid cardinalities";
  const Rational free_card = cardinality(*two_element_action(6, 3));
  if (free_card != Rational(3)) return fail(name, "free action on six gives " + free_card.str());
  const Rational fixed_card = cardinality(*two_element_action(5, 2));
  if (fixed_card != Rational(5, 2))
    return fail(name, "one fixed point on five gives " + fixed_card.str());
  return pass(name, "free 3/1, one fixed point 5/2");
}

CheckResult check_cardinality_two_routes() {
  const std::string name = "cardinality route agreement";
  std::mt19937 rng(1003);
  for (int i = 0; i < 200; ++i) {
    const BlockGroupoid g = random_block_groupoid(rng, 8, 40, 8, false);
    const ValidationReport rep = validate_groupoid(*g.g);
    if (!rep.ok) return fail(name, "instance " + std::to_string(i) + ": " + rep.violations.front());
    const Rational by_classes = cardinality(*g.g);
    const Rational by_sources = cardinality_by_sources(*g.g);
    if (by_classes != by_sources)
      return fail(name, "instance " + std::to_string(i) + ": " + by_classes.str() +
                            " by classes vs " + by_sources.str() + " by sources");
  }
  return pass(name, "200 random groupoids");
}

CheckResult check_matrix_against_column_oracle() {
  const std::string name = "matrix against column oracle";
  std::mt19937 rng(1004);
  for (int i = 0; i < 100; ++i) {
    const BlockGroupoid domain = random_block_groupoid(rng, 6, 30, 4, false);
    const BlockGroupoid codomain = random_block_groupoid(rng, 6, 30, 4, false);
    const Span s = random_span(rng, domain, codomain);
    const ClassTable dt = class_table(domain.g);
    const ClassTable ct = class_table(codomain.g);
    if (matrix_of(ct, dt, s) != matrix_by_columns(ct, dt, s))
      return fail(name, "instance " + std::to_string(i) + " disagrees");
  }
  return pass(name, "100 random spans");
}

CheckResult check_composition_functoriality() {
  const std::string name = "composition functoriality";
  std::mt19937 rng(1005);
  for (int i = 0; i < 50; ++i) {
    const BlockGroupoid x = random_block_groupoid(rng, 5, 24, 3, false);
    const BlockGroupoid y = random_block_groupoid(rng, 5, 24, 3, false);
    const BlockGroupoid z = random_block_groupoid(rng, 5, 24, 3, false);
    const Span s = random_span(rng, x, y, 3);
    const Span t = random_span(rng, y, z, 3);
    const Span ts = compose_spans(t, s);
    const ClassTable xt = class_table(x.g);
    const ClassTable yt = class_table(y.g);
    const ClassTable zt = class_table(z.g);
    if (matrix_of(zt, xt, ts) != matrix_of(zt, yt, t) * matrix_of(yt, xt, s))
      return fail(name, "instance " + std::to_string(i) + " breaks functoriality");
  }
  const BlockGroupoid x = random_block_groupoid(rng, 6, 30, 4, false);
  const ClassTable xt = class_table(x.g);
  if (square_matrix(xt, identity_span(x.g)) != RationalMatrix::identity(xt.rows()))
    return fail(name, "identity span misses the identity matrix");
  return pass(name, "50 composable pairs plus the identity span");
}

CheckResult check_linearity() {
  const std::string name = "linearity of vectors and matrices";
  std::mt19937 rng(1006);
  const auto z3 = std::make_shared<const Group>(cyclic_group(3));
  const GroupoidPtr third = group_groupoid(z3);
  for (int i = 0; i < 10; ++i) {
    const BlockGroupoid x = random_block_groupoid(rng, 5, 24, 3, false);
    const BlockGroupoid y = random_block_groupoid(rng, 5, 24, 3, false);
    const Span s = random_span(rng, x, y, 3);
    const Span t = random_span(rng, x, y, 3);
    const ClassTable xt = class_table(x.g);
    const ClassTable yt = class_table(y.g);
    const RationalMatrix ms = matrix_of(yt, xt, s);
    const RationalMatrix mt = matrix_of(yt, xt, t);
    if (matrix_of(yt, xt, sum_spans(s, t)) != ms + mt)
      return fail(name, "span sum misses the matrix sum");
    if (matrix_of(yt, xt, scale_span(3, s)) != ms * Rational(3))
      return fail(name, "triple cover misses the tripled matrix");
    if (matrix_of(yt, xt, scale_span(third, s)) != ms * Rational(1, 3))
      return fail(name, "scaling by a one-third groupoid misses a third of the matrix");

    auto [u, v] = equal_vector_states(rng, x);
    const RationalVector vu = vector_of(xt, u);
    const RationalVector vv = vector_of(xt, v);
    if (vector_of(xt, sum_states(u, v)) != vu + vv)
      return fail(name, "state sum misses the vector sum");
    if (vector_of(xt, scale_state(2, u)) != Rational(2) * vu)
      return fail(name, "doubled state misses the doubled vector");
    if (vector_of(xt, scale_state(third, u)) != Rational(1, 3) * vu)
      return fail(name, "scaling a state by a one-third groupoid misses");

    const Rational ip = inner_product(u, v);
    if (ip != inner_product(v, u)) return fail(name, "inner product asymmetry");
    if (ip != pairing(xt, vu, vv)) return fail(name, "inner product misses the weighted sum");
    if (u.projection.source->num_objects() > 0 && inner_product(u, u) <= Rational(0))
      return fail(name, "inner product not positive on a nonempty state");
  }
  return pass(name, "10 rounds of sums, scalings and pairings");
}

CheckResult check_oscillator_ladder() {
  const std::string name = "oscillator ladder algebra";
  const osc::CommutationReport rep = osc::verify_commutation(6);
  if (!rep.block_verified) return fail(name, "commutator block check failed: " + rep.excluded_band);
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t m = 0; m <= 6; ++m) {
      const Rational a = rep.annihilate.at(m, n);
      if (a != Rational(m + 1 == n ? static_cast<long>(n) : 0))
        return fail(name, "lowering entry at (" + std::to_string(m) + ", " + std::to_string(n) +
                              ") is " + a.str());
      const Rational c = rep.create.at(m, n);
      if (c != Rational(m == n + 1 ? 1 : 0))
        return fail(name, "raising entry at (" + std::to_string(m) + ", " + std::to_string(n) +
                              ") is " + c.str());
    }

  const ClassTable table = class_table(osc::fin_sets(6));
  for (std::uint32_t m = 0; m <= 6; ++m) {
    const GroupoidOver um = osc::number_state(m, 6);
    const RationalVector vm = vector_of(table, um);
    for (std::uint32_t n = 0; n <= 6; ++n) {
      const GroupoidOver un = osc::number_state(n, 6);
      const Rational want =
          m == n ? Rational::unit_fraction(factorial(n)) : Rational(0);
      if (inner_product(um, un) != want)
        return fail(name, "state pairing (" + std::to_string(m) + ", " + std::to_string(n) +
                              ") misses " + want.str());
      if (pairing(table, vm, vector_of(table, un)) != want)
        return fail(name, "weighted pairing (" + std::to_string(m) + ", " + std::to_string(n) +
                              ") misses " + want.str());
    }
  }

  const RationalVector series = generating_function(table, osc::two_colored_state(6), 6);
  std::uint64_t power = 1;
  for (std::uint32_t n = 0; n <= 6; ++n) {
    const Rational want = Rational::from_uint64(power) * Rational::unit_fraction(factorial(n));
    if (series[n] != want)
      return fail(name, "two-coloring coefficient at " + std::to_string(n) + " is " +
                            series[n].str() + ", wanted " + want.str());
    power *= 2;
  }
  return pass(name, "ladder matrices, commutator block, pairings, two-coloring series");
}

CheckResult check_normal_order_and_diagrams() {
  const std::string name = "normal ordering and diagram counts";
  SpanOptions options;
  options.cap = 100'000'000;
  osc::LadderRealizer realizer(7, options);
  const ClassTable table = class_table(realizer.base());

  const RationalMatrix lower = square_matrix(table, realizer.word_span("a"));
  const RationalMatrix raise = square_matrix(table, realizer.word_span("c"));
  for (std::uint32_t n = 0; n <= 4; ++n) {
    const RationalMatrix realized = square_matrix(table, realizer.realize(osc::normal_order(n)));
    RationalMatrix expression(8, 8);
    for (std::uint32_t j = 0; j <= n; ++j) {
      RationalMatrix word = RationalMatrix::identity(8);
      for (std::uint32_t step = 0; step < n - j; ++step) word = lower * word;
      for (std::uint32_t step = 0; step < j; ++step) word = raise * word;
      expression = expression + word * Rational::from_uint64(osc::binomial(n, j));
    }
    // Ladder paths of length n between sizes at most 7 - n never leave the
    // truncation, so that corner is exact on both routes.
    const std::size_t safe = 8 - n;
    if (realized.corner(safe) != expression.corner(safe))
      return fail(name, "power " + std::to_string(n) +
                            " differs between span realization and matrix algebra");
  }

  const std::vector<std::vector<std::uint32_t>> panels = {{2}, {1, 1}, {3, 1}, {2, 2}, {4},
                                                          {3, 3}, {1, 2, 3}, {2, 1, 2, 1}};
  for (const auto& valences : panels) {
    osc::FormalOperatorSum product{{{"", 1}}};
    for (const std::uint32_t n : valences) product = product * osc::normal_order(n);
    const RationalMatrix m = square_matrix(table, realizer.realize(product));
    for (std::uint32_t i = 0; i <= 4; ++i)
      for (std::uint32_t j = 0; j <= 4; ++j) {
        const Rational want = osc::feynman_entry(valences, i, j);
        if (m.at(j, i) != want)
          return fail(name, "diagram count at (" + std::to_string(j) + ", " + std::to_string(i) +
                                ") misses the realized entry");
      }
  }
  return pass(name, "powers 0..4 and eight diagram panels");
}

CheckResult check_flag_algebra_q2() {
  const std::string name = "flag algebra at q = 2";
  const hecke::GeometricReport geo = hecke::verify_geometric_relations(2);
  if (!geo.ok()) return fail(name, "geometric relations: " + geo.notes.front());
  if (geo.flags != 21) return fail(name, "flag count is " + std::to_string(geo.flags));
  const hecke::HeckeAlgebraData h = hecke::hecke_algebra(2);
  if (!h.ok() || !h.materialized)
    return fail(name, std::string("algebra flags: ") + (h.unit_laws ? "" : "unit ") +
                          (h.quadratic ? "" : "quadratic ") + (h.braid ? "" : "braid ") +
                          (h.associative ? "" : "associative ") +
                          (h.reconciled ? "" : "reconciled ") +
                          (h.materialized ? "" : "materialized"));
  if (!h.orbits.enumerated || !h.orbits.injective)
    return fail(name, "orbit partition not confirmed against the full group");
  return pass(name, "21 flags, 6 orbits, relations, constants, materialized span");
}

CheckResult check_flag_algebra_q3_q5() {
  const std::string name = "flag algebra at q = 3 and geometry at q = 5";
  const hecke::GeometricReport geo3 = hecke::verify_geometric_relations(3);
  if (!geo3.ok()) return fail(name, "geometric relations at 3: " + geo3.notes.front());
  const hecke::HeckeAlgebraData h = hecke::hecke_algebra(3);
  if (!h.ok()) return fail(name, "algebra flags at 3 incomplete");
  if (h.orbits.flags != 52 || h.orbits.group_order != 5616)
    return fail(name, "group data at 3 drifted");
  const hecke::GeometricReport geo5 = hecke::verify_geometric_relations(5);
  if (!geo5.ok()) return fail(name, "geometric relations at 5: " + geo5.notes.front());
  const hecke::PairOrbits o5 = hecke::sl3_orbits(5);
  if (o5.sizes != std::vector<std::uint64_t>{186, 930, 930, 4650, 4650, 23250})
    return fail(name, "class sizes at 5 drifted");
  return pass(name, "full suite at 3, classifier relations at 5");
}

CheckResult check_equal_vectors_map_equally() {
  const std::string name = "equal vectors map equally";
  std::mt19937 rng(1011);
  for (int i = 0; i < 20; ++i) {
    const BlockGroupoid x = random_block_groupoid(rng, 5, 24, 3, false);
    const BlockGroupoid y = random_block_groupoid(rng, 5, 24, 3, false);
    const Span s = random_span(rng, x, y, 3);
    const ClassTable xt = class_table(x.g);
    const ClassTable yt = class_table(y.g);
    auto [u, v] = equal_vector_states(rng, x);
    if (vector_of(xt, u) != vector_of(xt, v))
      return fail(name, "instance " + std::to_string(i) + " failed to equalize inputs");
    if (vector_of(yt, apply_span(s, u)) != vector_of(yt, apply_span(s, v)))
      return fail(name, "instance " + std::to_string(i) + " separates equal vectors");
  }
  return pass(name, "20 spans applied to paired states");
}

CheckResult check_bloated_spans() {
  const std::string name = "bloated span equivalence";
  std::mt19937 rng(1012);
  for (int i = 0; i < 20; ++i) {
    const BlockGroupoid x = random_block_groupoid(rng, 5, 24, 3, false);
    const BlockGroupoid y = random_block_groupoid(rng, 5, 24, 3, false);
    const Span s = random_span(rng, x, y, 3);
    std::vector<std::uint32_t> copies(apex(s)->num_objects());
    for (auto& c : copies) c = 1 + static_cast<std::uint32_t>(rng() % 3);
    const BloatedSpan bloated = bloat_span(s, copies);
    const ValidationReport rep = check_span_equivalence(bloated.span, s, bloated.witness);
    if (!rep.ok)
      return fail(name, "instance " + std::to_string(i) + ": " + rep.violations.front());
    const ClassTable xt = class_table(x.g);
    const ClassTable yt = class_table(y.g);
    if (matrix_of(yt, xt, bloated.span) != matrix_of(yt, xt, s))
      return fail(name, "instance " + std::to_string(i) + " changes the matrix");
  }
  return pass(name, "20 witnessed duplications");
}

std::vector<CheckResult> run_all() {
  return {check_tower_cardinality(),
          check_action_cardinalities(),
          check_cardinality_two_routes(),
          check_matrix_against_column_oracle(),
          check_composition_functoriality(),
          check_linearity(),
          check_oscillator_ladder(),
          check_normal_order_and_diagrams(),
          check_flag_algebra_q2(),
          check_flag_algebra_q3_q5(),
          check_equal_vectors_map_equally(),
          check_bloated_spans()};
}

}  // namespace gpd::checks
