#pragma once

#include <cstdint>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd::osc {

struct DiagramCount {
  Rational entry;              // sum over diagram classes of inputs! / |stab|
  std::uint64_t matchings = 0; // labeled diagrams before dividing out leg relabelings
  std::uint64_t classes = 0;
};

// Counts the diagrams with one rigid vertex per valence entry, `inputs`
// bottom legs and `outputs` top legs: perfect matchings of all loose ends
// with no edge within one vertex, between two bottom legs, or between two
// top legs. Classes are taken up to relabeling bottom legs among themselves
// and top legs among themselves; the symmetry group of a class has order
// (number of bottom-to-top edges)!, checked against a brute-force stabilizer
// on a representative when the relabeling group is small, and against the
// class size through the orbit-stabilizer relation always.
DiagramCount count_diagrams(const std::vector<std::uint32_t>& valences, std::uint32_t inputs,
                            std::uint32_t outputs);

// The weighted class count: the matrix entry at (outputs, inputs) of the
// realized product of the normal-ordered powers given by valences.
Rational feynman_entry(const std::vector<std::uint32_t>& valences, std::uint32_t inputs,
                       std::uint32_t outputs);

}  // namespace gpd::osc
