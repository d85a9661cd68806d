#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "gpd/degroupoidify.hpp"
#include "gpd/errors.hpp"
#include "gpd/feynman.hpp"
#include "gpd/normal_order.hpp"
#include "gpd/oscillator.hpp"
#include "gpd/perm.hpp"
#include "gpd/span.hpp"

using namespace gpd;
using namespace gpd::osc;

namespace {

RationalMatrix mat(const ClassTable& t, const Span& s) { return matrix_of(t, t, s); }

}  // namespace

TEST_CASE("normal ordered powers expand binomially") {
  CHECK(normal_order(0) == FormalOperatorSum{{{"", 1}}});
  CHECK(normal_order(1) == FormalOperatorSum{{{"a", 1}, {"c", 1}}});
  CHECK(normal_order(2) == FormalOperatorSum{{{"aa", 1}, {"ca", 2}, {"cc", 1}}});
  CHECK(normal_order(3) ==
        FormalOperatorSum{{{"aaa", 1}, {"caa", 3}, {"cca", 3}, {"ccc", 1}}});
  CHECK(normal_order(4) == FormalOperatorSum{{{"aaaa", 1},
                                              {"caaa", 4},
                                              {"ccaa", 6},
                                              {"ccca", 4},
                                              {"cccc", 1}}});
  CHECK(word_display("cca") == "a*a*a");
  CHECK(word_display("") == "1");
}

TEST_CASE("formal sums multiply by concatenation") {
  const FormalOperatorSum x{{{"a", 2}, {"c", 1}}};
  const FormalOperatorSum y{{{"a", 1}, {"c", 3}}};
  const FormalOperatorSum p = x * y;
  CHECK(p == FormalOperatorSum{{{"aa", 2}, {"ac", 6}, {"ca", 1}, {"cc", 3}}});
  CHECK(x + y == FormalOperatorSum{{{"a", 3}, {"c", 4}}});
  CHECK(normal_order(1) * normal_order(1) ==
        FormalOperatorSum{{{"aa", 1}, {"ac", 1}, {"ca", 1}, {"cc", 1}}});
}

TEST_CASE("realized words have the expected matrices") {
  LadderRealizer real(4);
  const ClassTable t = class_table(real.base());

  const RationalMatrix lower = mat(t, real.word_span("a"));
  const RationalMatrix raise = mat(t, real.word_span("c"));
  CHECK(mat(t, real.word_span("")) == RationalMatrix::identity(5));
  CHECK(mat(t, real.word_span("ca")) == raise * lower);
  CHECK(mat(t, real.word_span("ac")) == lower * raise);
  CHECK(mat(t, real.word_span("cca")) == raise * raise * lower);

  const Span one = real.realize(FormalOperatorSum{{{"", 1}}});
  CHECK(mat(t, one) == RationalMatrix::identity(5));
  const Span mix = real.realize(FormalOperatorSum{{{"a", 2}, {"ca", 1}}});
  CHECK(mat(t, mix) == lower * Rational(2) + raise * lower);
  const Span zero = real.realize(FormalOperatorSum{});
  CHECK(mat(t, zero) == RationalMatrix(5, 5));

  CHECK_THROWS_AS(real.word_span("x"), DomainError);
}

TEST_CASE("realized normal ordered powers are parity sparse") {
  LadderRealizer real(5);
  const ClassTable t = class_table(real.base());
  const RationalMatrix m3 = mat(t, real.realize(normal_order(3)));
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      if ((r + c + 3) % 2 != 0) CHECK(m3.at(r, c) == Rational(0));
}

TEST_CASE("diagram counts match hand-computed values") {
  CHECK(feynman_entry({3, 3}, 0, 0) == Rational(6));
  CHECK(feynman_entry({2}, 1, 1) == Rational(2));
  CHECK(feynman_entry({1}, 0, 1) == Rational(1));
  CHECK(feynman_entry({1}, 1, 0) == Rational(1));
  CHECK(feynman_entry({}, 2, 2) == Rational(1));
  CHECK(feynman_entry({}, 2, 1) == Rational(0));
  CHECK(feynman_entry({3}, 1, 2) == Rational(3));
  CHECK(feynman_entry({2}, 0, 1) == Rational(0));
}

TEST_CASE("class weights recover the matching count") {
  const std::vector<std::vector<std::uint32_t>> lists = {{}, {2}, {3}, {2, 2}, {1, 3}, {4}};
  for (const auto& valences : lists)
    for (std::uint32_t i = 0; i <= 3; ++i)
      for (std::uint32_t j = 0; j <= 3; ++j) {
        const DiagramCount c = count_diagrams(valences, i, j);
        CHECK(c.entry == Rational::from_uint64(c.matchings) *
                             Rational::unit_fraction(factorial(j)));
      }
}

TEST_CASE("realized products match diagram counts on a sample") {
  LadderRealizer real(5);
  const ClassTable t = class_table(real.base());

  const std::vector<std::vector<std::uint32_t>> lists = {{2}, {1, 1}, {3, 1}};
  for (const auto& valences : lists) {
    FormalOperatorSum product{{{"", 1}}};
    for (std::uint32_t n : valences) product = product * normal_order(n);
    const RationalMatrix m = mat(t, real.realize(product));
    for (std::uint32_t i = 0; i <= 2; ++i)
      for (std::uint32_t j = 0; j <= 2; ++j)
        CHECK(m.at(j, i) == feynman_entry(valences, i, j));
  }
}
