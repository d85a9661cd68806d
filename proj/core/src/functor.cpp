#include "gpd/functor.hpp"

#include <algorithm>
#include <numeric>

#include "gpd/errors.hpp"

namespace gpd {

bool same_shape(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (&a == &b) return true;
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
  for (MorId m = 0; m < a.num_morphisms(); ++m)
    if (a.src(m) != b.src(m) || a.tgt(m) != b.tgt(m)) return false;
  for (ObjId x = 0; x < a.num_objects(); ++x)
    if (a.identity(x) != b.identity(x)) return false;
  return true;
}

Functor identity_functor(GroupoidPtr g) {
  Functor f;
  f.source = g;
  f.target = g;
  f.obj.resize(g->num_objects());
  std::iota(f.obj.begin(), f.obj.end(), 0u);
  f.mor.resize(g->num_morphisms());
  std::iota(f.mor.begin(), f.mor.end(), 0u);
  return f;
}

Functor compose_functors(const Functor& second, const Functor& first) {
  if (first.target.get() != second.source.get() && !same_shape(*first.target, *second.source))
    throw DomainError("functor composition across mismatched groupoids");
  Functor out;
  out.source = first.source;
  out.target = second.target;
  out.obj.resize(first.obj.size());
  for (std::size_t x = 0; x < first.obj.size(); ++x) out.obj[x] = second.obj[first.obj[x]];
  out.mor.resize(first.mor.size());
  for (std::size_t m = 0; m < first.mor.size(); ++m) out.mor[m] = second.mor[first.mor[m]];
  return out;
}

ValidationReport validate_functor(const Functor& f, const ValidationLimits& limits) {
  ValidationReport rep;
  if (!f.source || !f.target) {
    rep.note("functor missing source or target groupoid");
    return rep;
  }
  const FiniteGroupoid& s = *f.source;
  const FiniteGroupoid& t = *f.target;
  if (f.obj.size() != s.num_objects() || f.mor.size() != s.num_morphisms()) {
    rep.note("functor table sizes do not match the source groupoid");
    return rep;
  }
  for (ObjId x = 0; x < s.num_objects(); ++x)
    if (f.obj[x] >= t.num_objects()) {
      rep.note("object image out of range at " + std::to_string(x));
      return rep;
    }
  for (MorId m = 0; m < s.num_morphisms(); ++m)
    if (f.mor[m] >= t.num_morphisms()) {
      rep.note("morphism image out of range at " + std::to_string(m));
      return rep;
    }

  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    if (t.src(f.mor[m]) != f.obj[s.src(m)] || t.tgt(f.mor[m]) != f.obj[s.tgt(m)])
      rep.note("morphism " + std::to_string(m) + " maps to one with mismatched endpoints");
  }
  for (ObjId x = 0; x < s.num_objects(); ++x)
    if (f.mor[s.identity(x)] != t.identity(f.obj[x]))
      rep.note("identity of object " + std::to_string(x) + " not preserved");
  if (!rep.ok) return rep;

  const std::uint64_t pairs = composable_pair_count(s);
  if (pairs > limits.max_pairs)
    throw BoundError("functor source has " + std::to_string(pairs) +
                     " composable pairs, above the validation cap");
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    for (MorId b : s.morphisms_from(s.tgt(a))) {
      ++rep.pairs_checked;
      const MorId ba = s.compose_unchecked(b, a);
      if (f.mor[ba] != t.compose_unchecked(f.mor[b], f.mor[a])) {
        rep.note("composition not preserved on (" + std::to_string(b) + ", " + std::to_string(a) +
                 ")");
        if (rep.violations.size() > 16) return rep;
      }
    }
  }
  return rep;
}

NaturalIso identity_iso(const Functor& f) {
  NaturalIso a;
  a.from = f;
  a.to = f;
  a.component.resize(f.obj.size());
  for (std::size_t x = 0; x < f.obj.size(); ++x) a.component[x] = f.target->identity(f.obj[x]);
  return a;
}

ValidationReport validate_natural_iso(const NaturalIso& a, const ValidationLimits& limits) {
  (void)limits;
  ValidationReport rep;
  if (!a.from.source || !a.to.source || a.from.source.get() != a.to.source.get() ||
      a.from.target.get() != a.to.target.get()) {
    if (!a.from.source || !a.to.source ||
        !same_shape(*a.from.source, *a.to.source) ||
        !same_shape(*a.from.target, *a.to.target)) {
      rep.note("components relate functors that are not parallel");
      return rep;
    }
  }
  const FiniteGroupoid& s = *a.from.source;
  const FiniteGroupoid& t = *a.from.target;
  if (a.component.size() != s.num_objects()) {
    rep.note("component count does not match the source groupoid");
    return rep;
  }
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    const MorId c = a.component[x];
    if (c >= t.num_morphisms() || t.src(c) != a.from.obj[x] || t.tgt(c) != a.to.obj[x]) {
      rep.note("component at object " + std::to_string(x) + " has wrong endpoints");
      return rep;
    }
  }
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    const MorId lhs = t.compose_unchecked(a.component[s.tgt(m)], a.from.mor[m]);
    const MorId rhs = t.compose_unchecked(a.to.mor[m], a.component[s.src(m)]);
    if (lhs != rhs) {
      rep.note("naturality square fails at morphism " + std::to_string(m));
      if (rep.violations.size() > 16) return rep;
    }
  }
  return rep;
}

NaturalIso whisker_left(const Functor& post, const NaturalIso& a) {
  NaturalIso out;
  out.from = compose_functors(post, a.from);
  out.to = compose_functors(post, a.to);
  out.component.resize(a.component.size());
  for (std::size_t x = 0; x < a.component.size(); ++x) out.component[x] = post.mor[a.component[x]];
  return out;
}

NaturalIso whisker_right(const NaturalIso& a, const Functor& pre) {
  NaturalIso out;
  out.from = compose_functors(a.from, pre);
  out.to = compose_functors(a.to, pre);
  out.component.resize(pre.obj.size());
  for (std::size_t x = 0; x < pre.obj.size(); ++x) out.component[x] = a.component[pre.obj[x]];
  return out;
}

NaturalIso vertical_compose(const NaturalIso& second, const NaturalIso& first) {
  if (first.to.target.get() != second.from.target.get() &&
      !same_shape(*first.to.target, *second.from.target))
    throw DomainError("vertical composition across mismatched targets");
  NaturalIso out;
  out.from = first.from;
  out.to = second.to;
  const FiniteGroupoid& t = *first.from.target;
  out.component.resize(first.component.size());
  for (std::size_t x = 0; x < first.component.size(); ++x)
    out.component[x] = t.compose_unchecked(second.component[x], first.component[x]);
  return out;
}

EquivalenceReport check_equivalence(const Functor& f, const ValidationLimits& limits) {
  EquivalenceReport rep;
  ValidationReport base = validate_functor(f, limits);
  rep.functor_ok = base.ok;
  if (!base.ok) {
    rep.notes = std::move(base.violations);
    return rep;
  }
  const FiniteGroupoid& s = *f.source;
  const FiniteGroupoid& t = *f.target;

  rep.faithful = true;
  rep.full = true;
  std::vector<MorId> images;
  for (ObjId x = 0; x < s.num_objects() && (rep.faithful || rep.full); ++x) {
    for (ObjId y = 0; y < s.num_objects(); ++y) {
      const auto source_hom = s.hom(x, y);
      images.assign(source_hom.begin(), source_hom.end());
      for (MorId& m : images) m = f.mor[m];
      std::sort(images.begin(), images.end());
      const std::size_t distinct =
          static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
      if (distinct != source_hom.size()) {
        rep.faithful = false;
        rep.notes.push_back("two morphisms " + std::to_string(x) + " -> " + std::to_string(y) +
                            " share an image");
      }
      if (distinct != t.hom(f.obj[x], f.obj[y]).size()) {
        rep.full = false;
        rep.notes.push_back("hom " + std::to_string(x) + " -> " + std::to_string(y) +
                            " does not cover its image hom set");
      }
      if (!rep.faithful && !rep.full) break;
    }
  }

  const ClassPartition target_classes = iso_classes(t);
  std::vector<char> hit(target_classes.size(), 0);
  for (ObjId x = 0; x < s.num_objects(); ++x) hit[target_classes.class_of[f.obj[x]]] = 1;
  rep.essentially_surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  if (!rep.essentially_surjective)
    rep.notes.push_back("some isomorphism class of the target is missed");
  return rep;
}

}  // namespace gpd
