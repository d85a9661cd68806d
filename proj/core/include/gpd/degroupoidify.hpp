#pragma once

#include <cstdint>
#include <vector>

#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"
#include "gpd/span.hpp"

namespace gpd {

// Isomorphism classes of a base groupoid, with the automorphism group order
// of one representative per class. Rows and columns of every matrix taken
// over this base are indexed by these classes, in representative order.
struct ClassTable {
  GroupoidPtr base;
  ClassPartition classes;
  std::vector<std::uint64_t> aut;  // per class, at its representative

  std::size_t rows() const { return classes.reps.size(); }
  std::size_t row_of(ObjId x) const { return classes.class_of[x]; }
};

ClassTable class_table(GroupoidPtr base);

// The groupoid over the base whose total part is one object with its
// automorphisms, included at `x`.
GroupoidOver point_state(GroupoidPtr base, ObjId x);

// Entry per class: sum of 1/|Aut(v)| over total objects v sitting over it.
RationalVector vector_of(const ClassTable& table, const GroupoidOver& over);

// Entry (row [y], column [x]): sum over apex classes [s] mapping to ([y], [x])
// of |Aut(x)| / |Aut(s)|. Linear in the span: it turns span application into
// matrix-vector multiplication over the class basis.
RationalMatrix matrix_of(const ClassTable& codomain, const ClassTable& domain, const Span& s);

// Same matrix assembled column by column through span application to point
// states. Slower; serves as an independent check of matrix_of.
RationalMatrix matrix_by_columns(const ClassTable& codomain, const ClassTable& domain,
                                 const Span& s, const SpanOptions& options = {});

// Cardinality of the comparison groupoid of two states over a base: objects
// are pairs of total objects plus a base morphism between their images.
Rational inner_product(const GroupoidOver& a, const GroupoidOver& b);

// The same value computed from the degroupoidified vectors:
// sum over classes of |Aut| * a * b.
Rational pairing(const ClassTable& table, const RationalVector& a, const RationalVector& b);

// Coefficients [0, max_degree] of the series attached to a state over a base
// whose object n stands for degree n. Requires the base to have at least
// max_degree + 1 objects, each its own class.
RationalVector generating_function(const ClassTable& table, const GroupoidOver& over,
                                   std::size_t max_degree);

}  // namespace gpd
