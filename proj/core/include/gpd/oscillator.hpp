#pragma once

#include <cstdint>
#include <string>

#include "gpd/degroupoidify.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"
#include "gpd/span.hpp"

namespace gpd::osc {

// Finite sets of size 0..max_size with bijections between equal sizes: one
// object per size, automorphisms the permutations. Skeletal by construction.
GroupoidPtr fin_sets(std::uint32_t max_size);

// Span over fin_sets(max_size) whose apex has one object per size below the
// top. The right leg adds a fresh top element, the left leg includes as-is,
// so the matrix lowers the size: entry (n-1, n) equals n.
Span annihilation_span(std::uint32_t max_size);

// Adjoint of the annihilation span: raises the size, matrix entry (n+1, n)
// equals 1.
Span creation_span(std::uint32_t max_size);

// State concentrated at size n: an n-element set with all its permutations.
GroupoidOver number_state(std::uint32_t n, std::uint32_t max_size);

// Two-colorings of the sets of size 0..max_size with color-preserving
// bijections, projected down to the underlying size. The fiber over size n
// has 2^n objects in n+1 classes, so the series coefficient in degree n is
// 2^n / n!. Sizes above 7 are not supported.
GroupoidOver two_colored_state(std::uint32_t max_size);

struct CommutationReport {
  RationalMatrix annihilate;             // size-lowering matrix
  RationalMatrix create;                 // size-raising matrix
  RationalMatrix raise_then_lower;       // matrix of the composite: raise, then lower
  RationalMatrix lower_then_raise_plus_one;  // matrix of (lower, then raise) summed with identity
  std::size_t agree_rows = 0;   // largest r with equal top-left r x r corners
  bool block_verified = false;  // both matrices equal on all entries (m, n), m, n < max_size
  std::string excluded_band;    // entries left out of the comparison, and why
};

// Composes the ladder spans both ways over fin_sets(max_size), adds the
// identity span to the lower-then-raise side, and compares the two matrices
// away from the top size, where clipping the ladder at max_size distorts
// entries.
CommutationReport verify_commutation(std::uint32_t max_size, const SpanOptions& options = {});

}  // namespace gpd::osc
