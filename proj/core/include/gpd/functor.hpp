#pragma once

#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

// Functor between finite groupoids as two lookup tables. Well-formedness
// (identities, endpoints, composites) is checked by validate_functor, not on
// construction; hot paths build functors whose correctness is guaranteed by
// the construction itself.
struct Functor {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<ObjId> obj;
  std::vector<MorId> mor;

  ObjId on_obj(ObjId x) const { return obj[x]; }
  MorId on_mor(MorId m) const { return mor[m]; }
};

// Equal object count, morphism count, endpoints and identities. The cheap
// compatibility test used when two functors are plugged together; full
// equality of composition law is what validate_* is for.
bool same_shape(const FiniteGroupoid& a, const FiniteGroupoid& b);

Functor identity_functor(GroupoidPtr g);

// second after first. Requires first.target and second.source to be the same
// groupoid (pointer or shape); throws DomainError otherwise.
Functor compose_functors(const Functor& second, const Functor& first);

ValidationReport validate_functor(const Functor& f, const ValidationLimits& limits = {});

// Natural isomorphism between parallel functors; component[x] is a morphism
// from(x) -> to(x) in the common target.
struct NaturalIso {
  Functor from;
  Functor to;
  std::vector<MorId> component;
};

NaturalIso identity_iso(const Functor& f);

ValidationReport validate_natural_iso(const NaturalIso& a, const ValidationLimits& limits = {});

// post applied to every component: the iso post*from => post*to.
NaturalIso whisker_left(const Functor& post, const NaturalIso& a);

// Components reindexed along pre: the iso from*pre => to*pre.
NaturalIso whisker_right(const NaturalIso& a, const Functor& pre);

// second after first, componentwise in the target.
NaturalIso vertical_compose(const NaturalIso& second, const NaturalIso& first);

struct EquivalenceReport {
  bool functor_ok = false;
  bool faithful = false;
  bool full = false;
  bool essentially_surjective = false;
  std::vector<std::string> notes;

  bool ok() const { return functor_ok && faithful && full && essentially_surjective; }
};

EquivalenceReport check_equivalence(const Functor& f, const ValidationLimits& limits = {});

}  // namespace gpd
