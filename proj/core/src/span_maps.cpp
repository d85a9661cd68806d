#include "gpd/span_maps.hpp"

#include <string>
#include <utility>

#include "gpd/errors.hpp"

namespace gpd {

namespace {

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  return a == b || (a && b && same_shape(*a, *b));
}

bool same_functor(const Functor& a, const Functor& b) {
  return same_groupoid(a.source, b.source) && same_groupoid(a.target, b.target) &&
         a.obj == b.obj && a.mor == b.mor;
}

void absorb(ValidationReport& rep, const std::string& label, const ValidationReport& sub) {
  for (const std::string& v : sub.violations) rep.note(label + ": " + v);
  if (!sub.ok && sub.violations.empty()) rep.note(label + ": invalid");
}

}  // namespace

ValidationReport check_span_map(const Span& from, const Span& to, const SpanMap& m,
                                const ValidationLimits& limits) {
  ValidationReport rep;
  if (!same_groupoid(m.functor.source, apex(from))) rep.note("apex functor does not start at the source apex");
  if (!same_groupoid(m.functor.target, apex(to))) rep.note("apex functor does not land in the target apex");
  if (!same_groupoid(from.left.target, to.left.target)) rep.note("left feet differ");
  if (!same_groupoid(from.right.target, to.right.target)) rep.note("right feet differ");
  absorb(rep, "apex functor", validate_functor(m.functor, limits));
  if (!rep.ok) return rep;

  const Functor left_expected = compose_functors(to.left, m.functor);
  const Functor right_expected = compose_functors(to.right, m.functor);
  if (!same_functor(m.left_leg.from, from.left))
    rep.note("left iso does not start at the source left leg");
  if (!same_functor(m.left_leg.to, left_expected))
    rep.note("left iso does not end at the target left leg after the apex functor");
  if (!same_functor(m.right_leg.from, from.right))
    rep.note("right iso does not start at the source right leg");
  if (!same_functor(m.right_leg.to, right_expected))
    rep.note("right iso does not end at the target right leg after the apex functor");
  absorb(rep, "left iso", validate_natural_iso(m.left_leg, limits));
  absorb(rep, "right iso", validate_natural_iso(m.right_leg, limits));
  return rep;
}

ValidationReport check_span_equivalence(const Span& from, const Span& to,
                                        const SpanEquivalence& e,
                                        const ValidationLimits& limits) {
  ValidationReport rep;
  absorb(rep, "forward", check_span_map(from, to, e.forward, limits));
  absorb(rep, "backward", check_span_map(to, from, e.backward, limits));
  if (!rep.ok) return rep;

  const EquivalenceReport eq = check_equivalence(e.forward.functor, limits);
  if (!eq.ok()) {
    rep.note("forward apex functor is not an equivalence");
    for (const std::string& n : eq.notes) rep.note("forward apex functor: " + n);
  }

  const Functor round = compose_functors(e.backward.functor, e.forward.functor);
  if (!same_functor(e.unit.from, round)) rep.note("unit does not start at the round trip");
  if (!same_functor(e.unit.to, identity_functor(apex(from))))
    rep.note("unit does not end at the identity of the source apex");
  absorb(rep, "unit", validate_natural_iso(e.unit, limits));
  if (!rep.ok) return rep;

  // Compatibility of the unit with each leg: pushing the unit down must undo
  // exactly the two leg corrections, one from each direction.
  const FiniteGroupoid& a = *apex(from);
  const auto check_leg = [&](const Functor& leg, const NaturalIso& fwd, const NaturalIso& bwd,
                             const char* side) {
    const FiniteGroupoid& foot = *leg.target;
    for (ObjId s = 0; s < a.num_objects(); ++s) {
      const MorId down = fwd.component[s];
      const MorId back = bwd.component[e.forward.functor.obj[s]];
      const MorId under = leg.mor[e.unit.component[s]];
      const std::optional<MorId> half = foot.compose(back, down);
      const std::optional<MorId> whole =
          half ? foot.compose(under, *half) : std::nullopt;
      if (!whole || *whole != foot.identity(leg.obj[s])) {
        rep.note(std::string(side) + " leg triangle fails at apex object " + std::to_string(s));
        return;
      }
    }
  };
  check_leg(from.left, e.forward.left_leg, e.backward.left_leg, "left");
  check_leg(from.right, e.forward.right_leg, e.backward.right_leg, "right");
  return rep;
}

BloatedSpan bloat_span(const Span& s, const std::vector<std::uint32_t>& copies) {
  const GroupoidPtr a_ptr = apex(s);
  const FiniteGroupoid& a = *a_ptr;
  if (copies.size() != a.num_objects())
    throw StructuralError("one copy count per apex object is required");
  for (std::uint32_t k : copies)
    if (k == 0) throw DomainError("every apex object needs at least one copy");

  std::vector<std::uint32_t> obj_off(a.num_objects() + 1, 0);
  for (ObjId o = 0; o < a.num_objects(); ++o) obj_off[o + 1] = obj_off[o] + copies[o];
  const std::uint64_t n_obj = obj_off[a.num_objects()];

  std::vector<std::uint64_t> mor_base(a.num_morphisms() + 1, 0);
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    mor_base[f + 1] = mor_base[f] +
                      static_cast<std::uint64_t>(copies[a.src(f)]) * copies[a.tgt(f)];
  const std::uint64_t n_mor = mor_base[a.num_morphisms()];
  if (n_obj > 0xffffffffull || n_mor > 0xffffffffull)
    throw BoundError("bloated apex does not fit 32-bit ids");

  const auto obj_id = [&](ObjId o, std::uint32_t c) { return obj_off[o] + c; };
  const auto mor_id = [&](MorId f, std::uint32_t c1, std::uint32_t c2) {
    return static_cast<MorId>(mor_base[f] +
                              static_cast<std::uint64_t>(c1) * copies[a.tgt(f)] + c2);
  };

  std::vector<ObjId> src(n_mor), tgt(n_mor);
  std::vector<MorId> identity(n_obj), inverse(n_mor);
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    for (std::uint32_t c1 = 0; c1 < copies[a.src(f)]; ++c1)
      for (std::uint32_t c2 = 0; c2 < copies[a.tgt(f)]; ++c2) {
        const MorId m = mor_id(f, c1, c2);
        src[m] = obj_id(a.src(f), c1);
        tgt[m] = obj_id(a.tgt(f), c2);
        inverse[m] = mor_id(a.inverse(f), c2, c1);
      }
  for (ObjId o = 0; o < a.num_objects(); ++o)
    for (std::uint32_t c = 0; c < copies[o]; ++c)
      identity[obj_id(o, c)] = mor_id(a.identity(o), c, c);

  std::uint64_t n_pairs = 0;
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    for (MorId g : a.morphisms_from(a.tgt(f)))
      n_pairs += static_cast<std::uint64_t>(copies[a.src(f)]) * copies[a.tgt(f)] *
                 copies[a.tgt(g)];
  if (n_pairs > 50'000'000ull)
    throw BoundError("bloated composition table needs " + std::to_string(n_pairs) + " rows");

  std::vector<ComposeEntry> compose;
  compose.reserve(n_pairs);
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    for (MorId g : a.morphisms_from(a.tgt(f))) {
      const MorId h = a.compose_unchecked(g, f);
      for (std::uint32_t c1 = 0; c1 < copies[a.src(f)]; ++c1)
        for (std::uint32_t c2 = 0; c2 < copies[a.tgt(f)]; ++c2)
          for (std::uint32_t c3 = 0; c3 < copies[a.tgt(g)]; ++c3)
            compose.push_back({mor_id(g, c2, c3), mor_id(f, c1, c2), mor_id(h, c1, c3)});
    }

  const GroupoidPtr big = FiniteGroupoid::from_tables(
      static_cast<std::uint32_t>(n_obj), std::move(src), std::move(tgt), std::move(identity),
      std::move(inverse), std::move(compose), false);

  BloatedSpan out;
  SpanEquivalence& w = out.witness;

  w.forward.functor.source = big;
  w.forward.functor.target = a_ptr;
  w.forward.functor.obj.resize(n_obj);
  w.forward.functor.mor.resize(n_mor);
  for (ObjId o = 0; o < a.num_objects(); ++o)
    for (std::uint32_t c = 0; c < copies[o]; ++c) w.forward.functor.obj[obj_id(o, c)] = o;
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    for (std::uint32_t c1 = 0; c1 < copies[a.src(f)]; ++c1)
      for (std::uint32_t c2 = 0; c2 < copies[a.tgt(f)]; ++c2)
        w.forward.functor.mor[mor_id(f, c1, c2)] = f;

  // Both legs factor through the collapse on the nose, so every leg iso in
  // the witness is an identity.
  out.span.left = compose_functors(s.left, w.forward.functor);
  out.span.right = compose_functors(s.right, w.forward.functor);
  w.forward.left_leg = identity_iso(out.span.left);
  w.forward.right_leg = identity_iso(out.span.right);

  w.backward.functor.source = a_ptr;
  w.backward.functor.target = big;
  w.backward.functor.obj.resize(a.num_objects());
  w.backward.functor.mor.resize(a.num_morphisms());
  for (ObjId o = 0; o < a.num_objects(); ++o) w.backward.functor.obj[o] = obj_id(o, 0);
  for (MorId f = 0; f < a.num_morphisms(); ++f) w.backward.functor.mor[f] = mor_id(f, 0, 0);
  w.backward.left_leg = identity_iso(s.left);
  w.backward.right_leg = identity_iso(s.right);

  w.unit.from = compose_functors(w.backward.functor, w.forward.functor);
  w.unit.to = identity_functor(big);
  w.unit.component.resize(n_obj);
  for (ObjId o = 0; o < a.num_objects(); ++o)
    for (std::uint32_t c = 0; c < copies[o]; ++c)
      w.unit.component[obj_id(o, c)] = mor_id(a.identity(o), 0, c);

  return out;
}

}  // namespace gpd
