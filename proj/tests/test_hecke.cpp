#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "gpd/errors.hpp"
#include "gpd/hecke_algebra.hpp"
#include "gpd/hecke_geometry.hpp"
#include "gpd/hecke_orbits.hpp"
#include "gpd/rational.hpp"

using namespace gpd;
using namespace gpd::hecke;

namespace {

std::vector<Rational> basis_vector(std::uint32_t cls) {
  std::vector<Rational> v(6);
  v[cls] = Rational(1);
  return v;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f(5);
  CHECK(f.order() == 5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.neg(2) == 3);
  CHECK(f.inv(2) == 3);
  CHECK(f.mul(f.inv(4), 4) == 1);
  CHECK_THROWS_AS(f.inv(0), DomainError);
  CHECK_THROWS_AS(PrimeField(4), DomainError);
  CHECK_THROWS_AS(PrimeField(11), DomainError);
}

TEST_CASE("matrix helpers over a small field") {
  const PrimeField f(3);
  const Mat3 id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  const Mat3 m{1, 2, 0, 0, 1, 1, 0, 0, 1};
  CHECK(det3(id, f) == 1);
  CHECK(mul3(m, inverse3(m, f), f) == id);
  CHECK(mul3(inverse3(m, f), m, f) == id);
  CHECK_THROWS_AS(inverse3(Mat3{1, 2, 0, 2, 1, 0, 0, 0, 1}, f), DomainError);
}

TEST_CASE("seven point plane") {
  const ProjectivePlane plane(2);
  CHECK(plane.num_points() == 7);
  CHECK(plane.num_lines() == 7);
  for (std::uint32_t l = 0; l < 7; ++l) CHECK(plane.points_on(l).size() == 3);
  for (std::uint32_t p = 0; p < 7; ++p) CHECK(plane.lines_through(p).size() == 3);

  for (std::uint32_t p = 0; p < 7; ++p)
    for (std::uint32_t r = p + 1; r < 7; ++r) {
      const std::uint32_t l = plane.join(p, r);
      CHECK(plane.incident(p, l));
      CHECK(plane.incident(r, l));
    }
  CHECK_THROWS_AS(plane.join(3, 3), DomainError);

  const Mat3 shear{1, 1, 0, 0, 1, 0, 0, 0, 1};
  for (std::uint32_t p = 0; p < 7; ++p)
    for (std::uint32_t l = 0; l < 7; ++l)
      CHECK(plane.incident(p, l) ==
            plane.incident(plane.transform_point(shear, p), plane.transform_line(shear, l)));
}

TEST_CASE("flag varieties") {
  const FlagVariety x2(2);
  CHECK(x2.size() == 21);
  const FlagVariety x3(3);
  CHECK(x3.size() == 52);
  for (std::uint32_t f = 0; f < x2.size(); ++f)
    CHECK(x2.flag_id(x2.point_of(f), x2.line_of(f)) == f);

  // Some point misses some line; that pair is not a flag.
  const ProjectivePlane& plane = x2.plane();
  bool found = false;
  for (std::uint32_t p = 0; p < 7 && !found; ++p)
    for (std::uint32_t l = 0; l < 7 && !found; ++l)
      if (!plane.incident(p, l)) {
        CHECK_THROWS_AS(x2.flag_id(p, l), DomainError);
        found = true;
      }
  CHECK(found);
}

TEST_CASE("relation composition bookkeeping") {
  const FlagVariety x(2);
  const std::uint32_t n = x.size();
  const Relation p = point_relation(x);
  const Relation l = line_relation(x);
  CHECK(p.total() == std::uint64_t{n} * 2);
  CHECK(l.total() == std::uint64_t{n} * 2);
  // One step of each kind from each flag, so composite paths number n * q * q.
  CHECK(compose_relations(l, p).total() == std::uint64_t{n} * 4);
  const Relation sum = add_relations(p, scale_relation(3, l));
  CHECK(sum.total() == p.total() + 3 * l.total());
}

TEST_CASE("walk enumeration and the braid partner") {
  const FlagVariety x(2);
  const std::vector<BraidPath> plp = plp_paths(x);
  std::vector<BraidPath> lpl = lpl_paths(x);
  CHECK(plp.size() == 21 * 8);
  CHECK(lpl.size() == 21 * 8);
  std::sort(lpl.begin(), lpl.end());
  for (const BraidPath& w : plp) {
    const BraidPath partner = braid_partner(x, w);
    CHECK(partner.flags[0] == w.flags[0]);
    CHECK(partner.flags[3] == w.flags[3]);
    CHECK(std::binary_search(lpl.begin(), lpl.end(), partner));
  }
}

TEST_CASE("geometric relations hold at q = 2, 3, 5") {
  for (const std::uint32_t q : {2u, 3u, 5u}) {
    const GeometricReport r = verify_geometric_relations(q);
    const std::uint32_t pts = q * q + q + 1;
    CHECK(r.q == q);
    CHECK(r.flags == std::uint64_t{pts} * (q + 1));
    CHECK(r.quadratic_point);
    CHECK(r.quadratic_line);
    CHECK(r.braid_fibers);
    CHECK(r.braid_bijection);
    CHECK(r.equivariant);
    CHECK(r.ok());
    CHECK(r.notes.empty());
  }
}

TEST_CASE("projective line warm-up") {
  const A1Report two = verify_a1(2);
  CHECK(two.points == 3);
  CHECK(two.group_order == 6);
  CHECK(two.quadratic);
  CHECK(two.two_orbits);
  const A1Report three = verify_a1(3);
  CHECK(three.points == 4);
  CHECK(three.group_order == 24);
  CHECK(three.quadratic);
  CHECK(three.two_orbits);
}

TEST_CASE("group orders and enumeration") {
  CHECK(sl3_order(2) == 168);
  CHECK(sl3_order(3) == 5616);
  CHECK(sl3_order(5) == 372000);
  CHECK(sl2_order(2) == 6);
  CHECK(sl2_order(3) == 24);
  const PrimeField f2(2);
  CHECK(enumerate_sl3(f2).size() == 168);
  CHECK(enumerate_sl2(f2).size() == 6);
  CHECK_THROWS_AS(enumerate_sl3(PrimeField(5)), BoundError);

  const std::vector<Mat3> gens = sl3_generators();
  CHECK(gens.size() == 6);
  for (const Mat3& g : gens) CHECK(det3(g, f2) == 1);
}

TEST_CASE("relative position classifier") {
  const FlagVariety x(2);
  const std::uint32_t f = 0;
  CHECK(relative_position(x, f, f) == RelPos::equal);
  std::array<std::uint64_t, 6> tally{};
  for (std::uint32_t a = 0; a < x.size(); ++a)
    for (std::uint32_t b = 0; b < x.size(); ++b)
      ++tally[static_cast<std::uint32_t>(relative_position(x, a, b))];
  CHECK(tally == std::array<std::uint64_t, 6>{21, 42, 42, 84, 84, 168});
  CHECK(rel_pos_label(RelPos::braid) == "PLP");
  CHECK(rel_pos_label(RelPos::point_line) == "PL");
}

TEST_CASE("flag pair orbits") {
  SUBCASE("q = 2") {
    const PairOrbits o = sl3_orbits(2);
    CHECK(o.flags == 21);
    CHECK(o.group_order == 168);
    CHECK(o.enumerated);
    CHECK(o.injective);
    CHECK(o.sizes == std::vector<std::uint64_t>{21, 42, 42, 84, 84, 168});
    CHECK(o.stab_orders == std::vector<std::uint64_t>{8, 4, 4, 2, 2, 1});
    CHECK(o.labels == std::vector<std::string>{"e", "P", "L", "PL", "LP", "PLP"});
    for (std::uint32_t cls = 0; cls < 6; ++cls) {
      std::uint64_t count = 0;
      for (const std::uint32_t c : o.class_of)
        if (c == cls) ++count;
      CHECK(count == o.sizes[cls]);
      CHECK(o.class_of[o.reps[cls]] == cls);
    }
  }
  SUBCASE("q = 3") {
    const PairOrbits o = sl3_orbits(3);
    CHECK(o.flags == 52);
    CHECK(o.group_order == 5616);
    CHECK(o.enumerated);
    CHECK(o.sizes == std::vector<std::uint64_t>{52, 156, 156, 468, 468, 1404});
    CHECK(o.stab_orders == std::vector<std::uint64_t>{108, 36, 36, 12, 12, 4});
  }
  SUBCASE("q = 5 stays with the classifier") {
    const PairOrbits o = sl3_orbits(5);
    CHECK(o.flags == 186);
    CHECK(o.group_order == 372000);
    CHECK_FALSE(o.enumerated);
    CHECK(o.sizes == std::vector<std::uint64_t>{186, 930, 930, 4650, 4650, 23250});
    CHECK(o.stab_orders == std::vector<std::uint64_t>{2000, 400, 400, 80, 80, 16});
  }
}

TEST_CASE("polynomial scaffolding") {
  const Poly x = Poly::variable();
  const Poly p = x * x + Poly::constant(Rational(1));
  CHECK(p.eval(Rational(3)) == Rational(10));
  CHECK((p + Poly::constant(Rational(-1))).eval(Rational(2)) == Rational(4));
  const Poly zero = Poly::constant(Rational(0));
  CHECK(zero.coeff.empty());
  CHECK((zero * x).coeff.empty());
}

TEST_CASE("word template and its specializations") {
  const std::vector<Poly> tmpl = template_tensor();

  SUBCASE("at one the deformation collapses to the permutation table") {
    const StructureTensor at_one = evaluate_template(tmpl, Rational(1));
    const StructureTensor coxeter = coxeter_tensor();
    CHECK(at_one == coxeter);
    CHECK(coxeter.at(1, 1, 0) == Rational(1));
    CHECK(coxeter.at(1, 2, 3) == Rational(1));
    CHECK(coxeter.at(3, 1, 5) == Rational(1));
  }

  SUBCASE("generic entries") {
    // A reduced product concatenates; the square trades a letter for the
    // quadratic identity.
    const StructureTensor at_seven = evaluate_template(tmpl, Rational(7));
    CHECK(at_seven.at(3, 1, 5) == Rational(1));
    CHECK(at_seven.at(1, 1, 1) == Rational(6));
    CHECK(at_seven.at(1, 1, 0) == Rational(7));
    CHECK(at_seven.at(1, 3, 3) == Rational(6));
    CHECK(at_seven.at(1, 3, 2) == Rational(7));
  }
}

TEST_CASE("flag multiplication at q = 2") {
  const HeckeAlgebraData h = hecke_algebra(2);
  CHECK(h.q == 2);
  CHECK(h.ok());
  CHECK(h.materialized);
  CHECK(h.unit_laws);
  CHECK(h.quadratic);
  CHECK(h.braid);
  CHECK(h.associative);
  CHECK(h.reconciled);
  CHECK(h.triple_orbit_count == 71);

  for (std::uint32_t k = 0; k < 6; ++k) {
    CHECK(h.counts.at(1, 1, k) == Rational(k == 0 ? 2 : k == 1 ? 1 : 0));
    CHECK(h.counts.at(1, 2, k) == Rational(k == 3 ? 1 : 0));
  }

  const auto prod = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return tensor_product(h.counts, a, b);
  };
  const std::vector<Rational> pl = prod(basis_vector(1), basis_vector(2));
  CHECK(pl == basis_vector(3));
  CHECK(prod(pl, basis_vector(1)) == basis_vector(5));

  // Raw span constants carry the stabilizer weights on top of the counts.
  CHECK(h.span_constants.at(1, 1, 0) == Rational(4));
  CHECK(h.span_constants.at(1, 1, 1) == Rational(4));
  CHECK(h.span_constants.at(0, 0, 0) == Rational(8));

  CHECK(evaluate_template(template_tensor(), Rational(2)) == h.counts);
}

TEST_CASE("flag multiplication at q = 3") {
  const HeckeAlgebraData h = hecke_algebra(3);
  CHECK(h.ok());
  CHECK_FALSE(h.materialized);
  CHECK(h.triple_orbit_count == 72);
  for (std::uint32_t k = 0; k < 6; ++k)
    CHECK(h.counts.at(2, 2, k) == Rational(k == 0 ? 3 : k == 2 ? 2 : 0));
  CHECK(evaluate_template(template_tensor(), Rational(3)) == h.counts);
}

TEST_CASE("multiplication pipeline bounds") {
  CHECK_THROWS_AS(hecke_algebra(5), BoundError);
  CHECK_THROWS_AS(hecke_algebra(4), BoundError);
}
