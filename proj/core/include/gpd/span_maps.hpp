#pragma once

#include <cstdint>
#include <vector>

#include "gpd/span.hpp"

namespace gpd {

// Map of spans over fixed feet: a functor between the apexes and natural
// isomorphisms filling the two leg triangles.
struct SpanMap {
  Functor functor;      // apex of the source span -> apex of the target span
  NaturalIso left_leg;  // source left leg => target left leg after functor
  NaturalIso right_leg;
};

ValidationReport check_span_map(const Span& from, const Span& to, const SpanMap& m,
                                const ValidationLimits& limits = {});

// Equivalence of spans: a map each way plus a unit isomorphism pulling the
// round trip on the source apex back to the identity. The forward apex
// functor must itself be an equivalence of groupoids; the unit must be
// compatible with both legs, which pins the composite leg corrections to the
// identity.
struct SpanEquivalence {
  SpanMap forward;
  SpanMap backward;
  NaturalIso unit;  // backward.functor after forward.functor => identity
};

ValidationReport check_span_equivalence(const Span& from, const Span& to,
                                        const SpanEquivalence& e,
                                        const ValidationLimits& limits = {});

struct BloatedSpan {
  Span span;
  SpanEquivalence witness;  // from the bloated span back to the original
};

// Duplicates apex object o into copies[o] >= 1 interchangeable versions,
// connected by fresh isomorphisms, with both legs factored through the
// collapse back onto the original apex. The matrix is unchanged.
BloatedSpan bloat_span(const Span& s, const std::vector<std::uint32_t>& copies);

}  // namespace gpd
