#pragma once

#include <cstdint>
#include <vector>

namespace gpd {

// Finite group as a multiplication table. Elements are 0..order-1.
struct Group {
  std::uint32_t order = 1;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> mult;  // mult[a * order + b] = a*b
  std::vector<std::uint32_t> inv;

  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mult[a * order + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inv[a]; }
};

// Throws StructuralError for shape problems, DomainError when the table
// fails a group axiom.
void validate_group(const Group& g);

// Elements are permutations of {0..n-1} numbered by Lehmer rank, so the
// identity permutation is element 0. Capped at n = 7; the quadratic table
// stops being reasonable after that.
Group symmetric_group(std::uint32_t n);

Group cyclic_group(std::uint32_t n);

}  // namespace gpd
