#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpd/hecke_geometry.hpp"

namespace gpd::hecke {

// q^3 (q^2 - 1)(q^3 - 1), the number of 3x3 matrices of determinant one.
std::uint64_t sl3_order(std::uint32_t q);
// q (q^2 - 1), same for 2x2.
std::uint64_t sl2_order(std::uint32_t q);

// Every determinant-one matrix, by filtering all q^9 of them. BoundError
// above q = 3; larger fields fall back to the relative-position classifier.
std::vector<Mat3> enumerate_sl3(const PrimeField& f);
std::vector<std::array<std::uint32_t, 4>> enumerate_sl2(const PrimeField& f);

// The six elementary transvections, a generating set checked against the
// full enumeration where that exists.
std::vector<Mat3> sl3_generators();

// Permutation a matrix induces on the flags; the companion builds the table
// for a whole family at once, sharing the per-matrix inverse.
std::vector<std::uint32_t> flag_permutation(const FlagVariety& x, const Mat3& m);
std::vector<std::vector<std::uint32_t>> flag_permutations(const FlagVariety& x,
                                                          const std::vector<Mat3>& ms);

// How an ordered pair of flags sits relative to each other, decided by the
// equality pattern of the parts plus the two cross incidences. The labels
// name the shortest step sequences reaching the pair: a point step changes
// the point and keeps the line, a line step the reverse.
enum class RelPos : std::uint32_t {
  equal = 0,
  point = 1,       // same line, points differ
  line = 2,        // same point, lines differ
  point_line = 3,  // all parts differ, second point on first line
  line_point = 4,  // all parts differ, first point on second line
  braid = 5,       // no coincidences at all
};

const char* rel_pos_label(RelPos r);

RelPos relative_position(const FlagVariety& x, std::uint32_t f1, std::uint32_t f2);

// Orbits of a permutation family acting diagonally on ordered pairs
// (a*n + b), respectively triples ((a*n + b)*n + c). Orbits are numbered by
// their least state.
struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint32_t> reps;
  std::vector<std::uint64_t> sizes;
};

OrbitPartition pair_orbit_closure(const std::vector<std::vector<std::uint32_t>>& perms,
                                  std::uint32_t n);
OrbitPartition triple_orbit_closure(const std::vector<std::vector<std::uint32_t>>& perms,
                                    std::uint32_t n);

// The six classes of flag pairs, classified by relative position for every q
// and, within the enumeration bound, cross-checked against closure under the
// full matrix group. Each class is a plain set of ordered pairs, so distinct
// classes never share a pair; the injective flag records that observation.
struct PairOrbits {
  std::uint32_t q = 0;
  std::uint32_t flags = 0;
  std::uint64_t group_order = 0;
  bool enumerated = false;
  bool injective = false;
  std::vector<std::uint32_t> class_of;  // flags*flags entries, values 0..5
  std::vector<std::string> labels;
  std::vector<std::uint32_t> reps;  // least pair index per class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> stab_orders;  // group_order / size, division exact
};

PairOrbits sl3_orbits(std::uint32_t q);

// The one-generator analogue on the projective line: flags are bare points,
// the generator relates distinct ones. Checks the quadratic identity by
// path counting and, within the enumeration bound, that the pairs split
// into the diagonal orbit and one off-diagonal orbit.
struct A1Report {
  std::uint32_t q = 0;
  std::uint32_t points = 0;
  std::uint64_t group_order = 0;
  bool quadratic = false;
  bool two_orbits = false;
};

A1Report verify_a1(std::uint32_t q);

}  // namespace gpd::hecke
