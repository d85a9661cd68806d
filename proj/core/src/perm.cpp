#include "gpd/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpd {

std::uint64_t factorial(std::uint32_t n) {
  if (n > 20) throw std::overflow_error("factorial: n! exceeds 64 bits for n > 20");
  std::uint64_t r = 1;
  for (std::uint32_t k = 2; k <= n; ++k) r *= k;
  return r;
}

Perm perm_identity(std::uint32_t n) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm perm_compose(const Perm& second, const Perm& first) {
  Perm r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::uint64_t perm_rank(const Perm& p) {
  const std::size_t n = p.size();
  std::uint64_t rank = 0;
  // Quadratic Lehmer encoding; n stays tiny so this beats fancier schemes.
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Perm perm_unrank(std::uint32_t n, std::uint64_t rank) {
  std::vector<std::uint8_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i);
  Perm p(n);
  std::uint64_t f = factorial(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    f /= (n - i);
    const std::uint64_t digit = rank / f;
    rank %= f;
    p[i] = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return p;
}

std::uint64_t perm_pack(const Perm& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.size(); ++i) key |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return key;
}

}  // namespace gpd
