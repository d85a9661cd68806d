#include "gpd/span.hpp"

#include <algorithm>
#include <unordered_map>

#include "gpd/builders.hpp"
#include "gpd/errors.hpp"

namespace gpd {

namespace {

void require_common_target(const Functor& f, const Functor& g, const char* what) {
  if (f.target.get() != g.target.get() && !same_shape(*f.target, *g.target))
    throw DomainError(what);
}

// Morphism ids grouped by source in plain id order, unlike the hom index
// which sorts by target. The pullback needs (u, v) enumeration ascending by
// id to keep its morphism blocks sorted.
struct IdOrderedOut {
  std::vector<std::uint32_t> begin;
  std::vector<MorId> ids;

  std::span<const MorId> out(ObjId x) const {
    return {ids.data() + begin[x], ids.data() + begin[x + 1]};
  }
};

IdOrderedOut id_ordered_out(const FiniteGroupoid& g) {
  IdOrderedOut csr;
  csr.begin.assign(g.num_objects() + 1, 0);
  for (MorId m = 0; m < g.num_morphisms(); ++m) ++csr.begin[g.src(m) + 1];
  for (ObjId x = 0; x < g.num_objects(); ++x) csr.begin[x + 1] += csr.begin[x];
  csr.ids.resize(g.num_morphisms());
  std::vector<std::uint32_t> cursor(csr.begin.begin(), csr.begin.end() - 1);
  for (MorId m = 0; m < g.num_morphisms(); ++m) csr.ids[cursor[g.src(m)]++] = m;
  return csr;
}

}  // namespace

WeakPullback weak_pullback(const Functor& f, const Functor& g, const SpanOptions& options) {
  require_common_target(f, g, "weak pullback legs do not share a codomain");
  const FiniteGroupoid& a = *f.source;
  const FiniteGroupoid& b = *g.source;
  const FiniteGroupoid& c = *f.target;
  const std::uint32_t nb = b.num_objects();

  const std::uint64_t grid = static_cast<std::uint64_t>(a.num_objects()) * nb;
  if (grid > options.cap)
    throw BoundError("weak pullback object grid has " + std::to_string(grid) +
                     " cells, above the cap of " + std::to_string(options.cap));

  // First pass: count candidate objects and locate each (x, y) block.
  std::vector<std::uint32_t> pair_off(grid + 1, 0);
  std::uint64_t n_obj = 0;
  for (ObjId x = 0; x < a.num_objects(); ++x)
    for (ObjId y = 0; y < nb; ++y) {
      pair_off[static_cast<std::size_t>(x) * nb + y] = static_cast<std::uint32_t>(n_obj);
      n_obj += c.hom(f.obj[x], g.obj[y]).size();
      if (n_obj > options.cap)
        throw BoundError("weak pullback needs over " + std::to_string(options.cap) +
                         " objects; raise the cap or compose reduced");
    }
  pair_off[grid] = static_cast<std::uint32_t>(n_obj);

  std::vector<ObjId> obj_left(n_obj), obj_right(n_obj);
  std::vector<MorId> obj_witness(n_obj);
  {
    std::size_t o = 0;
    for (ObjId x = 0; x < a.num_objects(); ++x)
      for (ObjId y = 0; y < nb; ++y)
        for (MorId w : c.hom(f.obj[x], g.obj[y])) {
          obj_left[o] = x;
          obj_right[o] = y;
          obj_witness[o] = w;
          ++o;
        }
  }

  const IdOrderedOut out_a = id_ordered_out(a);
  const IdOrderedOut out_b = id_ordered_out(b);

  std::uint64_t n_mor = 0;
  for (std::size_t o = 0; o < n_obj; ++o) {
    n_mor += static_cast<std::uint64_t>(out_a.out(obj_left[o]).size()) *
             out_b.out(obj_right[o]).size();
    if (n_mor > options.cap)
      throw BoundError("weak pullback needs over " + std::to_string(options.cap) +
                       " morphisms; raise the cap or compose reduced");
  }

  // Inverses of left-leg images, reused across every object sharing x.
  std::vector<MorId> f_mor_inv(a.num_morphisms());
  for (MorId u = 0; u < a.num_morphisms(); ++u) f_mor_inv[u] = c.inverse(f.mor[u]);

  const auto locate = [&](ObjId x, ObjId y, MorId w) -> ObjId {
    const std::size_t cell = static_cast<std::size_t>(x) * nb + y;
    const auto lo = obj_witness.begin() + pair_off[cell];
    const auto hi = obj_witness.begin() + pair_off[cell + 1];
    const auto it = std::lower_bound(lo, hi, w);
    if (it == hi || *it != w)
      throw StructuralError("weak pullback conjugation left the witness set");
    return static_cast<ObjId>(it - obj_witness.begin());
  };

  std::vector<ObjId> src(n_mor), tgt(n_mor);
  std::vector<MorId> identity(n_obj), part_u(n_mor), part_v(n_mor);
  {
    std::size_t k = 0;
    for (std::size_t o = 0; o < n_obj; ++o) {
      const ObjId x = obj_left[o];
      const ObjId y = obj_right[o];
      const MorId w = obj_witness[o];
      const MorId idx = a.identity(x);
      const MorId idy = b.identity(y);
      for (MorId u : out_a.out(x)) {
        const MorId half = c.compose_unchecked(w, f_mor_inv[u]);
        for (MorId v : out_b.out(y)) {
          src[k] = static_cast<ObjId>(o);
          tgt[k] = locate(a.tgt(u), b.tgt(v), c.compose_unchecked(g.mor[v], half));
          part_u[k] = u;
          part_v[k] = v;
          if (u == idx && v == idy) identity[o] = static_cast<MorId>(k);
          ++k;
        }
      }
    }
  }

  WeakPullback out;
  out.apex = FiniteGroupoid::pair_product(f.source, g.source, static_cast<std::uint32_t>(n_obj),
                                          std::move(src), std::move(tgt), std::move(identity),
                                          std::move(part_u), std::move(part_v), false);
  out.to_left.source = out.apex;
  out.to_left.target = f.source;
  out.to_left.obj = obj_left;
  out.to_right.source = out.apex;
  out.to_right.target = g.source;
  out.to_right.obj = obj_right;
  out.to_left.mor.resize(n_mor);
  out.to_right.mor.resize(n_mor);
  {
    // The apex backend owns the payload arrays; rebuild the leg tables from
    // the construction order, which assigned ids sequentially.
    std::size_t k = 0;
    for (std::size_t o = 0; o < n_obj; ++o) {
      for (MorId u : out_a.out(obj_left[o]))
        for (MorId v : out_b.out(obj_right[o])) {
          out.to_left.mor[k] = u;
          out.to_right.mor[k] = v;
          ++k;
        }
    }
  }
  out.square.from = compose_functors(f, out.to_left);
  out.square.to = compose_functors(g, out.to_right);
  out.square.component = obj_witness;
  out.obj_left = std::move(obj_left);
  out.obj_right = std::move(obj_right);
  out.obj_witness = std::move(obj_witness);
  return out;
}

HomOrbits hom_orbits(const FiniteGroupoid& c, std::span<const MorId> homs,
                     const std::vector<MorId>& left_muls, const std::vector<MorId>& right_muls) {
  const std::uint32_t n = static_cast<std::uint32_t>(homs.size());
  const auto pos_of = [&](MorId m) -> std::uint32_t {
    const auto it = std::lower_bound(homs.begin(), homs.end(), m);
    if (it == homs.end() || *it != m)
      throw StructuralError("orbit step left the hom set");
    return static_cast<std::uint32_t>(it - homs.begin());
  };

  HomOrbits out;
  std::vector<char> visited(n, 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t seed = 0; seed < n; ++seed) {
    if (visited[seed]) continue;
    visited[seed] = 1;
    stack.assign(1, seed);
    std::uint32_t size = 0;
    while (!stack.empty()) {
      const std::uint32_t p = stack.back();
      stack.pop_back();
      ++size;
      const MorId alpha = homs[p];
      for (MorId l : left_muls) {
        const std::uint32_t q = pos_of(c.compose_unchecked(l, alpha));
        if (!visited[q]) {
          visited[q] = 1;
          stack.push_back(q);
        }
      }
      for (MorId r : right_muls) {
        const std::uint32_t q = pos_of(c.compose_unchecked(alpha, r));
        if (!visited[q]) {
          visited[q] = 1;
          stack.push_back(q);
        }
      }
    }
    out.rep_pos.push_back(seed);
    out.orbit_size.push_back(size);
  }
  return out;
}

ValidationReport validate_span(const Span& s, const ValidationLimits& limits) {
  ValidationReport rep;
  if (!s.left.source || !s.right.source) {
    rep.note("span leg missing its source");
    return rep;
  }
  if (s.left.source.get() != s.right.source.get() && !same_shape(*s.left.source, *s.right.source))
    rep.note("span legs do not share an apex");
  const ValidationReport l = validate_functor(s.left, limits);
  const ValidationReport r = validate_functor(s.right, limits);
  for (const auto& v : l.violations) rep.note("left leg: " + v);
  for (const auto& v : r.violations) rep.note("right leg: " + v);
  rep.pairs_checked = l.pairs_checked + r.pairs_checked;
  return rep;
}

WeakPullback weak_pullback(const Cospan& c, const SpanOptions& options) {
  return weak_pullback(c.left, c.right, options);
}

Span identity_span(GroupoidPtr g) {
  Span s;
  s.left = identity_functor(g);
  s.right = s.left;
  return s;
}

Span adjoint_span(const Span& s) {
  Span out;
  out.left = s.right;
  out.right = s.left;
  return out;
}

Span sum_spans(const Span& a, const Span& b) {
  require_common_target(a.left, b.left, "span sum needs a common codomain");
  require_common_target(a.right, b.right, "span sum needs a common domain");
  const CoproductResult co = coproduct_groupoid({apex(a), apex(b)});
  Span out;
  out.left.source = co.groupoid;
  out.left.target = a.left.target;
  out.left.obj = a.left.obj;
  out.left.obj.insert(out.left.obj.end(), b.left.obj.begin(), b.left.obj.end());
  out.left.mor = a.left.mor;
  out.left.mor.insert(out.left.mor.end(), b.left.mor.begin(), b.left.mor.end());
  out.right.source = co.groupoid;
  out.right.target = a.right.target;
  out.right.obj = a.right.obj;
  out.right.obj.insert(out.right.obj.end(), b.right.obj.begin(), b.right.obj.end());
  out.right.mor = a.right.mor;
  out.right.mor.insert(out.right.mor.end(), b.right.mor.begin(), b.right.mor.end());
  return out;
}

Span scale_span(std::uint64_t k, const Span& s) {
  std::vector<GroupoidPtr> parts(k, apex(s));
  const GroupoidPtr total = FiniteGroupoid::disjoint_sum(parts);
  Span out;
  out.left.source = total;
  out.left.target = s.left.target;
  out.right.source = total;
  out.right.target = s.right.target;
  out.left.obj.reserve(k * s.left.obj.size());
  out.left.mor.reserve(k * s.left.mor.size());
  out.right.obj.reserve(k * s.right.obj.size());
  out.right.mor.reserve(k * s.right.mor.size());
  for (std::uint64_t i = 0; i < k; ++i) {
    out.left.obj.insert(out.left.obj.end(), s.left.obj.begin(), s.left.obj.end());
    out.left.mor.insert(out.left.mor.end(), s.left.mor.begin(), s.left.mor.end());
    out.right.obj.insert(out.right.obj.end(), s.right.obj.begin(), s.right.obj.end());
    out.right.mor.insert(out.right.mor.end(), s.right.mor.begin(), s.right.mor.end());
  }
  return out;
}

Span scale_span(GroupoidPtr scale, const Span& s) {
  const ProductResult prod = product_groupoid(scale, apex(s));
  Span out;
  out.left = compose_functors(s.left, prod.proj_right);
  out.right = compose_functors(s.right, prod.proj_right);
  return out;
}

GroupoidOver sum_states(const GroupoidOver& a, const GroupoidOver& b) {
  const Span s = sum_spans(span_of_state(a), span_of_state(b));
  return GroupoidOver{s.left};
}

GroupoidOver scale_state(std::uint64_t k, const GroupoidOver& v) {
  const Span s = scale_span(k, span_of_state(v));
  return GroupoidOver{s.left};
}

GroupoidOver scale_state(GroupoidPtr scale, const GroupoidOver& v) {
  const Span s = scale_span(std::move(scale), span_of_state(v));
  return GroupoidOver{s.left};
}

SubgroupoidResult essential_preimage(const GroupoidOver& v, ObjId x) {
  const FiniteGroupoid& base = *v.projection.target;
  if (x >= base.num_objects())
    throw DomainError("essential preimage of an object outside the base");
  const ClassPartition classes = iso_classes(base);
  const std::uint32_t wanted = classes.class_of[x];
  std::vector<ObjId> picked;
  for (ObjId a = 0; a < v.projection.source->num_objects(); ++a)
    if (classes.class_of[v.projection.obj[a]] == wanted) picked.push_back(a);
  return full_subgroupoid(v.projection.source, std::move(picked));
}

namespace {

Span naive_compose(const Span& second, const Span& first, const SpanOptions& options) {
  const WeakPullback wpb = weak_pullback(first.left, second.right, options);
  Span out;
  out.right = compose_functors(first.right, wpb.to_left);
  out.left = compose_functors(second.left, wpb.to_right);
  return out;
}

Span reduced_compose(const Span& second, const Span& first, const SpanOptions& options) {
  const FiniteGroupoid& a = *apex(first);
  const FiniteGroupoid& b = *apex(second);
  const FiniteGroupoid& c = *first.left.target;
  if (!is_skeletal(a) || !is_skeletal(b))
    throw DomainError("reduced span composition requires skeletal apexes");

  std::vector<ObjId> obj_s, obj_t;
  std::vector<MorId> obj_w;
  std::vector<ObjId> src, tgt;
  std::vector<MorId> identity, part_u, part_v;

  std::uint64_t work = 0;
  for (ObjId s = 0; s < a.num_objects(); ++s) {
    const auto auts_s = a.hom(s, s);
    std::vector<MorId> right_muls;
    right_muls.reserve(auts_s.size());
    for (MorId u : auts_s) right_muls.push_back(c.inverse(first.left.mor[u]));

    for (ObjId t = 0; t < b.num_objects(); ++t) {
      const auto homs = c.hom(first.left.obj[s], second.right.obj[t]);
      if (homs.empty()) continue;
      const auto auts_t = b.hom(t, t);
      std::vector<MorId> left_muls;
      left_muls.reserve(auts_t.size());
      for (MorId v : auts_t) left_muls.push_back(second.right.mor[v]);

      work += homs.size() * (left_muls.size() + right_muls.size());
      if (work > options.cap)
        throw BoundError("reduced span composition walk exceeds the cap of " +
                         std::to_string(options.cap));

      std::unordered_map<MorId, std::vector<MorId>> bucket;
      for (MorId v : auts_t) bucket[second.right.mor[v]].push_back(v);

      const HomOrbits orbits = hom_orbits(c, homs, left_muls, right_muls);
      for (std::size_t oi = 0; oi < orbits.rep_pos.size(); ++oi) {
        const MorId alpha = homs[orbits.rep_pos[oi]];
        const ObjId o = static_cast<ObjId>(obj_s.size());
        obj_s.push_back(s);
        obj_t.push_back(t);
        obj_w.push_back(alpha);

        const MorId alpha_inv = c.inverse(alpha);
        std::uint64_t stab = 0;
        MorId ident = 0;
        bool ident_found = false;
        for (MorId u : auts_s) {
          const MorId conj =
              c.compose_unchecked(c.compose_unchecked(alpha, first.left.mor[u]), alpha_inv);
          const auto it = bucket.find(conj);
          if (it == bucket.end()) continue;
          for (MorId v : it->second) {
            if (u == a.identity(s) && v == b.identity(t)) {
              ident = static_cast<MorId>(src.size());
              ident_found = true;
            }
            src.push_back(o);
            tgt.push_back(o);
            part_u.push_back(u);
            part_v.push_back(v);
            ++stab;
          }
        }
        if (!ident_found)
          throw StructuralError("reduced composition lost an identity; legs are not functorial");
        if (stab * orbits.orbit_size[oi] !=
            static_cast<std::uint64_t>(auts_s.size()) * auts_t.size())
          throw StructuralError("stabilizer count does not match the orbit size");
        identity.push_back(ident);
      }
    }
  }

  const std::uint32_t n_obj = static_cast<std::uint32_t>(obj_s.size());
  Functor to_left, to_right;
  to_left.target = apex(first);
  to_right.target = apex(second);
  to_left.obj = std::move(obj_s);
  to_right.obj = std::move(obj_t);
  to_left.mor = part_u;  // copies: the factory consumes the originals
  to_right.mor = part_v;

  const GroupoidPtr composite = FiniteGroupoid::pair_product(
      apex(first), apex(second), n_obj, std::move(src), std::move(tgt), std::move(identity),
      std::move(part_u), std::move(part_v), true);
  to_left.source = composite;
  to_right.source = composite;

  Span out;
  out.right = compose_functors(first.right, to_left);
  out.left = compose_functors(second.left, to_right);
  return out;
}

}  // namespace

Span compose_spans(const Span& second, const Span& first, const SpanOptions& options) {
  require_common_target(first.left, second.right, "span composition needs matching middle feet");
  using Strategy = SpanOptions::Strategy;
  if (options.strategy == Strategy::naive) return naive_compose(second, first, options);
  if (options.strategy == Strategy::reduced) return reduced_compose(second, first, options);

  const FiniteGroupoid& a = *apex(first);
  const FiniteGroupoid& b = *apex(second);
  const FiniteGroupoid& c = *first.left.target;
  const std::uint64_t grid = static_cast<std::uint64_t>(a.num_objects()) * b.num_objects();
  bool naive_fits = grid <= options.cap;
  if (naive_fits) {
    std::uint64_t obj_cand = 0, mor_cand = 0;
    for (ObjId x = 0; x < a.num_objects() && naive_fits; ++x) {
      const std::uint64_t out_x = a.morphisms_from(x).size();
      for (ObjId y = 0; y < b.num_objects(); ++y) {
        const std::uint64_t h = c.hom(first.left.obj[x], second.right.obj[y]).size();
        obj_cand += h;
        mor_cand += h * out_x * b.morphisms_from(y).size();
        if (obj_cand > options.cap || mor_cand > options.cap) {
          naive_fits = false;
          break;
        }
      }
    }
  }
  if (naive_fits) return naive_compose(second, first, options);
  if (is_skeletal(a) && is_skeletal(b)) return reduced_compose(second, first, options);
  throw BoundError(
      "span composition exceeds the cap and the apexes are not skeletal; "
      "raise the cap or compose skeletal spans reduced");
}

Span span_of_state(const GroupoidOver& v) {
  const GroupoidPtr total = v.projection.source;
  Span out;
  out.left = v.projection;
  out.right.source = total;
  out.right.target = terminal_groupoid();
  out.right.obj.assign(total->num_objects(), 0);
  out.right.mor.assign(total->num_morphisms(), 0);
  return out;
}

GroupoidOver apply_span(const Span& s, const GroupoidOver& v, const SpanOptions& options) {
  const Span composite = compose_spans(s, span_of_state(v), options);
  return GroupoidOver{composite.left};
}

WeakPullback inner_product_pullback(const GroupoidOver& a, const GroupoidOver& b,
                                    const SpanOptions& options) {
  return weak_pullback(a.projection, b.projection, options);
}

}  // namespace gpd
