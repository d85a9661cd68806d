#include "gpd/feynman.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "gpd/errors.hpp"
#include "gpd/perm.hpp"

namespace gpd::osc {

namespace {

// Points are numbered vertex ends first, then bottom legs, then top legs.
struct Layout {
  std::vector<std::uint32_t> end_vertex;  // vertex index per vertex end
  std::uint32_t n_ends = 0;
  std::uint32_t inputs = 0;
  std::uint32_t outputs = 0;

  std::uint32_t total() const { return n_ends + inputs + outputs; }
  bool is_end(std::uint32_t p) const { return p < n_ends; }
  bool is_bottom(std::uint32_t p) const { return p >= n_ends && p < n_ends + inputs; }
  bool is_top(std::uint32_t p) const { return p >= n_ends + inputs; }

  bool allowed(std::uint32_t p, std::uint32_t q) const {
    if (is_end(p) && is_end(q)) return end_vertex[p] != end_vertex[q];
    if (is_bottom(p) && is_bottom(q)) return false;
    if (is_top(p) && is_top(q)) return false;
    return true;
  }
};

using Matching = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

void enumerate(const Layout& lay, std::vector<std::uint32_t>& partner, Matching& pairs,
               const std::function<void(const Matching&)>& emit) {
  const std::uint32_t n = lay.total();
  std::uint32_t p = 0;
  while (p < n && partner[p] != n) ++p;
  if (p == n) {
    emit(pairs);
    return;
  }
  for (std::uint32_t q = p + 1; q < n; ++q) {
    if (partner[q] != n || !lay.allowed(p, q)) continue;
    partner[p] = q;
    partner[q] = p;
    pairs.push_back({p, q});
    enumerate(lay, partner, pairs, emit);
    pairs.pop_back();
    partner[p] = n;
    partner[q] = n;
  }
}

// Orbit invariant under relabeling bottom legs among themselves and top legs
// among themselves: the vertex-to-vertex edges, which ends take a bottom leg,
// which take a top leg, and how many legs run straight through.
struct ClassKey {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> internal;
  std::vector<std::uint32_t> bottom_ends;
  std::vector<std::uint32_t> top_ends;
  std::uint32_t through = 0;

  auto operator<=>(const ClassKey&) const = default;
};

ClassKey key_of(const Layout& lay, const Matching& m) {
  ClassKey k;
  for (const auto& [p, q] : m) {
    if (lay.is_end(p) && lay.is_end(q)) k.internal.push_back({p, q});
    else if (lay.is_end(p) && lay.is_bottom(q)) k.bottom_ends.push_back(p);
    else if (lay.is_end(p) && lay.is_top(q)) k.top_ends.push_back(p);
    else if (lay.is_bottom(p) && lay.is_top(q)) ++k.through;
    else throw StructuralError("impossible edge in a diagram matching");
  }
  std::sort(k.internal.begin(), k.internal.end());
  std::sort(k.bottom_ends.begin(), k.bottom_ends.end());
  std::sort(k.top_ends.begin(), k.top_ends.end());
  return k;
}

// Order of the subgroup of leg relabelings fixing the matching, found by
// trying every pair of permutations.
std::uint64_t brute_stabilizer(const Layout& lay, const Matching& m) {
  const auto normalize = [](Matching mm) {
    for (auto& [p, q] : mm)
      if (p > q) std::swap(p, q);
    std::sort(mm.begin(), mm.end());
    return mm;
  };
  const Matching base = normalize(m);
  const std::uint64_t fi = factorial(lay.inputs), fo = factorial(lay.outputs);
  std::uint64_t fixed = 0;
  for (std::uint64_t rs = 0; rs < fi; ++rs) {
    const Perm sigma = perm_unrank(lay.inputs, rs);
    for (std::uint64_t rt = 0; rt < fo; ++rt) {
      const Perm tau = perm_unrank(lay.outputs, rt);
      Matching moved = m;
      for (auto& [p, q] : moved) {
        const auto shift = [&](std::uint32_t x) {
          if (lay.is_bottom(x)) return lay.n_ends + sigma[x - lay.n_ends];
          if (lay.is_top(x)) return lay.n_ends + lay.inputs + tau[x - lay.n_ends - lay.inputs];
          return x;
        };
        p = shift(p);
        q = shift(q);
      }
      if (normalize(std::move(moved)) == base) ++fixed;
    }
  }
  return fixed;
}

}  // namespace

DiagramCount count_diagrams(const std::vector<std::uint32_t>& valences, std::uint32_t inputs,
                            std::uint32_t outputs) {
  if (inputs > 6 || outputs > 6)
    throw BoundError("diagram counting is limited to 6 legs per side");
  Layout lay;
  lay.inputs = inputs;
  lay.outputs = outputs;
  for (std::uint32_t v = 0; v < valences.size(); ++v)
    for (std::uint32_t e = 0; e < valences[v]; ++e) lay.end_vertex.push_back(v);
  lay.n_ends = static_cast<std::uint32_t>(lay.end_vertex.size());
  if (lay.total() > 24) throw BoundError("diagram counting is limited to 24 loose ends");

  DiagramCount out;
  if (lay.total() % 2 != 0) return out;

  struct ClassData {
    std::uint64_t seen = 0;
    std::uint32_t through = 0;
    Matching representative;
  };
  std::map<ClassKey, ClassData> classes;

  std::vector<std::uint32_t> partner(lay.total(), lay.total());
  Matching pairs;
  enumerate(lay, partner, pairs, [&](const Matching& m) {
    ++out.matchings;
    ClassKey k = key_of(lay, m);
    auto [it, fresh] = classes.try_emplace(std::move(k));
    if (fresh) {
      it->second.through = it->first.through;
      it->second.representative = m;
    }
    ++it->second.seen;
  });

  const std::uint64_t fi = factorial(inputs), fo = factorial(outputs);
  for (const auto& [k, data] : classes) {
    const std::uint64_t stab = factorial(data.through);
    if (fi * fo <= 10'000 && brute_stabilizer(lay, data.representative) != stab)
      throw StructuralError("diagram symmetry formula disagrees with the brute-force count");
    if (data.seen * stab != fi * fo)
      throw StructuralError("diagram class size disagrees with its symmetry order");
    out.entry += Rational::from_uint64(fi) * Rational::unit_fraction(stab);
  }
  out.classes = classes.size();
  return out;
}

Rational feynman_entry(const std::vector<std::uint32_t>& valences, std::uint32_t inputs,
                       std::uint32_t outputs) {
  return count_diagrams(valences, inputs, outputs).entry;
}

}  // namespace gpd::osc
