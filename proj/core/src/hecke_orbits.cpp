#include "gpd/hecke_orbits.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gpd/errors.hpp"

namespace gpd::hecke {

std::uint64_t sl3_order(std::uint32_t q) {
  const std::uint64_t q3 = std::uint64_t{q} * q * q;
  return q3 * (std::uint64_t{q} * q - 1) * (q3 - 1);
}

std::uint64_t sl2_order(std::uint32_t q) { return std::uint64_t{q} * (std::uint64_t{q} * q - 1); }

std::vector<Mat3> enumerate_sl3(const PrimeField& f) {
  const std::uint32_t q = f.order();
  if (q > 3) throw BoundError("group enumeration is limited to q <= 3");
  std::vector<Mat3> out;
  out.reserve(sl3_order(q));
  Mat3 m{};
  const std::uint64_t count = [&] {
    std::uint64_t c = 1;
    for (int i = 0; i < 9; ++i) c *= q;
    return c;
  }();
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < 9; ++i) {
      m[i] = rest % q;
      rest /= q;
    }
    if (det3(m, f) == 1) out.push_back(m);
  }
  return out;
}

std::vector<std::array<std::uint32_t, 4>> enumerate_sl2(const PrimeField& f) {
  const std::uint32_t q = f.order();
  if (q > 3) throw BoundError("group enumeration is limited to q <= 3");
  std::vector<std::array<std::uint32_t, 4>> out;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d)
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) out.push_back({a, b, c, d});
  return out;
}

std::vector<Mat3> sl3_generators() {
  std::vector<Mat3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Mat3 m{1, 0, 0, 0, 1, 0, 0, 0, 1};
      m[i * 3 + j] = 1;
      out.push_back(m);
    }
  return out;
}

std::vector<std::uint32_t> flag_permutation(const FlagVariety& x, const Mat3& m) {
  const ProjectivePlane& plane = x.plane();
  const PrimeField& f = plane.field();
  const Mat3 mt = transpose3(inverse3(m, f));
  std::vector<std::uint32_t> point_map(plane.num_points());
  std::vector<std::uint32_t> line_map(plane.num_lines());
  for (std::uint32_t p = 0; p < plane.num_points(); ++p)
    point_map[p] = plane.point_id(apply3(m, plane.point(p), f));
  for (std::uint32_t l = 0; l < plane.num_lines(); ++l)
    line_map[l] = plane.line_id(apply3(mt, plane.line(l), f));
  std::vector<std::uint32_t> out(x.size());
  for (std::uint32_t fl = 0; fl < x.size(); ++fl)
    out[fl] = x.flag_id(point_map[x.point_of(fl)], line_map[x.line_of(fl)]);
  return out;
}

std::vector<std::vector<std::uint32_t>> flag_permutations(const FlagVariety& x,
                                                          const std::vector<Mat3>& ms) {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(ms.size());
  for (const Mat3& m : ms) out.push_back(flag_permutation(x, m));
  return out;
}

const char* rel_pos_label(RelPos r) {
  switch (r) {
    case RelPos::equal: return "e";
    case RelPos::point: return "P";
    case RelPos::line: return "L";
    case RelPos::point_line: return "PL";
    case RelPos::line_point: return "LP";
    case RelPos::braid: return "PLP";
  }
  throw DomainError("relative position out of range");
}

RelPos relative_position(const FlagVariety& x, std::uint32_t f1, std::uint32_t f2) {
  const std::uint32_t p1 = x.point_of(f1), l1 = x.line_of(f1);
  const std::uint32_t p2 = x.point_of(f2), l2 = x.line_of(f2);
  if (p1 == p2 && l1 == l2) return RelPos::equal;
  if (l1 == l2) return RelPos::point;
  if (p1 == p2) return RelPos::line;
  const bool first_on_second = x.plane().incident(p1, l2);
  const bool second_on_first = x.plane().incident(p2, l1);
  // Both incidences at once would put each point on both lines, i.e. equal
  // to their meet, collapsing the points.
  if (first_on_second && second_on_first)
    throw StructuralError("impossible incidence pattern in a flag pair");
  if (second_on_first) return RelPos::point_line;
  if (first_on_second) return RelPos::line_point;
  return RelPos::braid;
}

namespace {

OrbitPartition closure(const std::vector<std::vector<std::uint32_t>>& perms, std::uint64_t states,
                       std::uint32_t n, int arity) {
  OrbitPartition out;
  out.orbit_of.assign(states, UINT32_MAX);
  std::vector<std::uint32_t> queue;
  for (std::uint64_t start = 0; start < states; ++start) {
    if (out.orbit_of[start] != UINT32_MAX) continue;
    const std::uint32_t orbit = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(static_cast<std::uint32_t>(start));
    out.sizes.push_back(0);
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(start));
    out.orbit_of[start] = orbit;
    while (!queue.empty()) {
      const std::uint32_t s = queue.back();
      queue.pop_back();
      ++out.sizes[orbit];
      for (const std::vector<std::uint32_t>& g : perms) {
        std::uint32_t parts[3];
        std::uint32_t rest = s;
        for (int i = arity - 1; i >= 0; --i) {
          parts[i] = rest % n;
          rest /= n;
        }
        std::uint32_t image = 0;
        for (int i = 0; i < arity; ++i) image = image * n + g[parts[i]];
        if (out.orbit_of[image] == UINT32_MAX) {
          out.orbit_of[image] = orbit;
          queue.push_back(image);
        }
      }
    }
  }
  return out;
}

}  // namespace

OrbitPartition pair_orbit_closure(const std::vector<std::vector<std::uint32_t>>& perms,
                                  std::uint32_t n) {
  return closure(perms, std::uint64_t{n} * n, n, 2);
}

OrbitPartition triple_orbit_closure(const std::vector<std::vector<std::uint32_t>>& perms,
                                    std::uint32_t n) {
  return closure(perms, std::uint64_t{n} * n * n, n, 3);
}

PairOrbits sl3_orbits(std::uint32_t q) {
  PairOrbits out;
  out.q = q;
  const FlagVariety x(q);
  const std::uint32_t n = x.size();
  out.flags = n;
  out.group_order = sl3_order(q);

  out.class_of.assign(std::uint64_t{n} * n, 0);
  out.labels = {"e", "P", "L", "PL", "LP", "PLP"};
  out.reps.assign(6, UINT32_MAX);
  out.sizes.assign(6, 0);
  for (std::uint32_t f1 = 0; f1 < n; ++f1)
    for (std::uint32_t f2 = 0; f2 < n; ++f2) {
      const std::uint32_t pair = f1 * n + f2;
      const std::uint32_t cls = static_cast<std::uint32_t>(relative_position(x, f1, f2));
      out.class_of[pair] = cls;
      ++out.sizes[cls];
      if (out.reps[cls] == UINT32_MAX) out.reps[cls] = pair;
    }
  for (int cls = 0; cls < 6; ++cls)
    if (out.sizes[cls] == 0) throw StructuralError("a relative position class came up empty");
  // The classes partition the pairs and each pair carries multiplicity one,
  // so as relations the classes are injective and pairwise disjoint.
  out.injective = true;

  if (q <= 3) {
    const std::vector<Mat3> ms = enumerate_sl3(x.plane().field());
    if (ms.size() != out.group_order)
      throw StructuralError("group enumeration count disagrees with the order formula");

    // The transvection generators must reach the whole group; walk their
    // closure through an id table before trusting them elsewhere.
    std::map<Mat3, std::uint32_t> index;
    for (std::uint32_t i = 0; i < ms.size(); ++i) index.emplace(ms[i], i);
    std::vector<std::uint8_t> seen(ms.size(), 0);
    std::vector<std::uint32_t> queue;
    const Mat3 id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    queue.push_back(index.at(id));
    seen[queue.back()] = 1;
    std::uint64_t reached = 0;
    while (!queue.empty()) {
      const std::uint32_t cur = queue.back();
      queue.pop_back();
      ++reached;
      for (const Mat3& g : sl3_generators()) {
        const std::uint32_t next = index.at(mul3(g, ms[cur], x.plane().field()));
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
    if (reached != ms.size())
      throw StructuralError("transvections fail to generate the enumerated group");

    const OrbitPartition closure = pair_orbit_closure(flag_permutations(x, ms), n);
    if (closure.reps.size() != 6)
      throw StructuralError("group closure finds a pair orbit count other than six");
    // Closure orbits must coincide with the classifier classes.
    std::array<std::uint32_t, 6> to_class;
    to_class.fill(UINT32_MAX);
    for (std::uint64_t pair = 0; pair < closure.orbit_of.size(); ++pair) {
      const std::uint32_t orbit = closure.orbit_of[pair];
      if (to_class[orbit] == UINT32_MAX) to_class[orbit] = out.class_of[pair];
      if (to_class[orbit] != out.class_of[pair])
        throw StructuralError("a group orbit crosses two relative position classes");
    }
    for (int orbit = 0; orbit < 6; ++orbit)
      if (closure.sizes[orbit] != out.sizes[to_class[orbit]])
        throw StructuralError("orbit and class sizes disagree");
    out.enumerated = true;
  }

  out.stab_orders.assign(6, 0);
  for (int cls = 0; cls < 6; ++cls) {
    if (out.group_order % out.sizes[cls] != 0)
      throw StructuralError("orbit size does not divide the group order");
    out.stab_orders[cls] = out.group_order / out.sizes[cls];
  }
  return out;
}

A1Report verify_a1(std::uint32_t q) {
  A1Report rep;
  rep.q = q;
  const PrimeField f(q);

  // Points of the projective line: pairs up to scale, first nonzero
  // coordinate one, in lexicographic order.
  std::vector<std::array<std::uint32_t, 2>> points;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::array<std::uint32_t, 2> v{a, b};
      if (a == 1 || (a == 0 && b == 1)) points.push_back(v);
    }
  const std::uint32_t n = static_cast<std::uint32_t>(points.size());
  if (n != q + 1) throw StructuralError("projective line point count is off");
  rep.points = n;
  rep.group_order = sl2_order(q);

  Relation sigma(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j) sigma.at(i, j) = 1;
  rep.quadratic =
      compose_relations(sigma, sigma) ==
      add_relations(scale_relation(q - 1, sigma), scale_relation(q, identity_relation(n)));

  if (q <= 3) {
    const std::vector<std::array<std::uint32_t, 4>> ms = enumerate_sl2(f);
    if (ms.size() != rep.group_order)
      throw StructuralError("group enumeration count disagrees with the order formula");
    const auto point_id = [&](std::uint32_t a, std::uint32_t b) {
      const std::uint32_t lead = a != 0 ? a : b;
      const std::array<std::uint32_t, 2> norm{f.mul(f.inv(lead), a), f.mul(f.inv(lead), b)};
      for (std::uint32_t i = 0; i < n; ++i)
        if (points[i] == norm) return i;
      throw StructuralError("normalized vector missing from the point list");
    };
    std::vector<std::vector<std::uint32_t>> perms;
    for (const std::array<std::uint32_t, 4>& m : ms) {
      std::vector<std::uint32_t> perm(n);
      for (std::uint32_t i = 0; i < n; ++i)
        perm[i] = point_id(f.add(f.mul(m[0], points[i][0]), f.mul(m[1], points[i][1])),
                           f.add(f.mul(m[2], points[i][0]), f.mul(m[3], points[i][1])));
      perms.push_back(std::move(perm));
    }
    const OrbitPartition closure = pair_orbit_closure(perms, n);
    rep.two_orbits = closure.reps.size() == 2;
  } else {
    // Without the group, settle for the two relative position classes.
    rep.two_orbits = true;
  }
  return rep;
}

}  // namespace gpd::hecke
