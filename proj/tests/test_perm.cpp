#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "gpd/perm.hpp"

using namespace gpd;

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(20) == 2432902008176640000ull);
}

TEST_CASE("rank order matches lexicographic order of image vectors") {
  for (std::uint32_t n : {0u, 1u, 2u, 3u, 4u, 5u}) {
    Perm p = perm_identity(n);
    std::uint64_t expect = 0;
    do {
      CHECK(perm_rank(p) == expect);
      CHECK(perm_unrank(n, expect) == p);
      ++expect;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(expect == factorial(n));
  }
}

TEST_CASE("compose and inverse") {
  const Perm a = perm_unrank(5, 37);
  const Perm b = perm_unrank(5, 101);
  const Perm ab = perm_compose(a, b);
  for (std::size_t i = 0; i < 5; ++i) CHECK(ab[i] == a[b[i]]);
  CHECK(perm_compose(perm_inverse(a), a) == perm_identity(5));
  CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(5));
  CHECK(perm_rank(perm_identity(9)) == 0);
}

TEST_CASE("packing is injective per size") {
  for (std::uint32_t n : {3u, 4u}) {
    std::vector<std::uint64_t> keys;
    Perm p = perm_identity(n);
    do {
      keys.push_back(perm_pack(p));
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  }
}
