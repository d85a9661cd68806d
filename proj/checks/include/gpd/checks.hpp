#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gpd/groupoid.hpp"
#include "gpd/span.hpp"

namespace gpd::checks {

// Groupoid assembled from isomorphism-class blocks: block b holds n_objs
// mutually isomorphic objects whose automorphism group is `group`. Object
// and morphism ids follow the disjoint-sum layout, so callers can name the
// morphism (i -> j, element t) of a block directly.
struct BlockGroupoid {
  struct Block {
    ObjId first_obj = 0;
    MorId first_mor = 0;
    std::uint32_t n_objs = 0;
    std::shared_ptr<const Group> group;
  };

  GroupoidPtr g;
  std::vector<Block> blocks;

  ObjId object(std::uint32_t block, std::uint32_t i) const {
    return blocks[block].first_obj + i;
  }
  MorId morphism(std::uint32_t block, std::uint32_t i, std::uint32_t j, std::uint32_t t) const {
    const Block& b = blocks[block];
    return b.first_mor + (i * b.n_objs + j) * static_cast<std::uint32_t>(b.group->order) + t;
  }
};

// Random block groupoid within the given budgets. Vertex groups are drawn
// from the cyclic groups of order 1..4 plus the symmetric group on three
// letters; cyclic_only restricts to the cyclic ones, which is what the span
// generator needs for its apexes.
BlockGroupoid random_block_groupoid(std::mt19937& rng, std::uint32_t max_objects,
                                    std::uint64_t max_morphisms, std::uint32_t max_blocks,
                                    bool cyclic_only);

// Random span between the given feet: a cyclic-block apex, each block mapped
// to one block of each foot through a sampled homomorphism, twisted by
// per-object conjugators.
Span random_span(std::mt19937& rng, const BlockGroupoid& domain, const BlockGroupoid& codomain,
                 std::uint32_t max_apex_blocks = 4);

// Two states over base with the same vector but different totals: per class
// a target value t/2 realized once with order-two stabilizers and once with
// as few objects as possible.
std::pair<GroupoidOver, GroupoidOver> equal_vector_states(std::mt19937& rng,
                                                          const BlockGroupoid& base);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The twelve gate checks, in order. Each is self-contained and uses fixed
// seeds, so repeated runs are identical.
CheckResult check_tower_cardinality();
CheckResult check_action_cardinalities();
CheckResult check_cardinality_two_routes();
CheckResult check_matrix_against_column_oracle();
CheckResult check_composition_functoriality();
CheckResult check_linearity();
CheckResult check_oscillator_ladder();
CheckResult check_normal_order_and_diagrams();
CheckResult check_flag_algebra_q2();
CheckResult check_flag_algebra_q3_q5();
CheckResult check_equal_vectors_map_equally();
CheckResult check_bloated_spans();

std::vector<CheckResult> run_all();

}  // namespace gpd::checks
