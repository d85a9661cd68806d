#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpd/builders.hpp"
#include "gpd/functor.hpp"

namespace gpd {

// Span of groupoids from a domain X to a codomain Y: right leg apex -> X,
// left leg apex -> Y, both legs sharing their source groupoid.
struct Span {
  Functor left;
  Functor right;
};

inline GroupoidPtr apex(const Span& s) { return s.left.source; }

// A groupoid sitting over a base: the data of a state.
struct GroupoidOver {
  Functor projection;  // total -> base
};

struct SpanOptions {
  enum class Strategy {
    automatic,  // naive when it fits the cap, else orbit-reduced when legal
    naive,      // literal weak pullback, every triple materialized
    reduced,    // orbit representatives only; requires skeletal apexes
  };

  // Bound on materialized candidates (object triples, morphism pairs, orbit
  // walk steps). Exceeding it raises BoundError rather than truncating.
  std::uint64_t cap = 1'000'000;
  Strategy strategy = Strategy::automatic;
};

// Two functors into a shared target.
struct Cospan {
  Functor left;
  Functor right;
};

// Literal weak pullback of a cospan f: A -> C <- B : g. Apex objects are
// triples (x, y, w) with w an isomorphism f(x) -> g(y) in C, ordered by
// (x, y, w); morphisms are pairs (u, v) acting by conjugation on w.
struct WeakPullback {
  GroupoidPtr apex;
  Functor to_left;       // apex -> A
  Functor to_right;      // apex -> B
  NaturalIso square;     // f * to_left => g * to_right, component (x,y,w) |-> w
  std::vector<ObjId> obj_left;     // x per apex object
  std::vector<ObjId> obj_right;    // y per apex object
  std::vector<MorId> obj_witness;  // w per apex object
};

WeakPullback weak_pullback(const Functor& f, const Functor& g, const SpanOptions& options = {});
WeakPullback weak_pullback(const Cospan& c, const SpanOptions& options = {});

// Orbit decomposition of a hom-set under two commuting one-sided actions:
// alpha |-> l * alpha for l in left_muls and alpha |-> alpha * r for r in
// right_muls. homs must be ascending morphism ids (a hom() result). Returns
// representative positions (each the least of its orbit, ascending) and
// orbit sizes.
struct HomOrbits {
  std::vector<std::uint32_t> rep_pos;
  std::vector<std::uint32_t> orbit_size;
};

HomOrbits hom_orbits(const FiniteGroupoid& c, std::span<const MorId> homs,
                     const std::vector<MorId>& left_muls, const std::vector<MorId>& right_muls);

ValidationReport validate_span(const Span& s, const ValidationLimits& limits = {});

Span identity_span(GroupoidPtr g);

// Legs swapped; the apex is shared, not copied.
Span adjoint_span(const Span& s);

// Coproduct of apexes over the same feet.
Span sum_spans(const Span& a, const Span& b);

// k disjoint copies of the apex; k = 0 gives the empty span.
Span scale_span(std::uint64_t k, const Span& s);

// Apex replaced by scale x apex, legs factored through the projection away
// from the scale factor. Degroupoidifies to multiplication by the cardinality
// of scale.
Span scale_span(GroupoidPtr scale, const Span& s);

// Coproduct of totals over the shared base.
GroupoidOver sum_states(const GroupoidOver& a, const GroupoidOver& b);
GroupoidOver scale_state(std::uint64_t k, const GroupoidOver& v);
GroupoidOver scale_state(GroupoidPtr scale, const GroupoidOver& v);

// Full subgroupoid of the total on the objects sent to something isomorphic
// to x in the base.
SubgroupoidResult essential_preimage(const GroupoidOver& v, ObjId x);

// second after first: first goes X -> Y, second goes Y -> Z. The apex is the
// weak pullback of first's left leg against second's right leg. The reduced
// strategy builds one object per orbit of connecting isomorphisms, with
// stabilizer pairs as automorphisms; it requires both apexes skeletal and
// yields a span equivalent to the naive composite (equal matrix).
Span compose_spans(const Span& second, const Span& first, const SpanOptions& options = {});

// A state as a span from the terminal groupoid to its base.
Span span_of_state(const GroupoidOver& v);

GroupoidOver apply_span(const Span& s, const GroupoidOver& v, const SpanOptions& options = {});

// Literal weak pullback of the two projections.
WeakPullback inner_product_pullback(const GroupoidOver& a, const GroupoidOver& b,
                                    const SpanOptions& options = {});

}  // namespace gpd
