#include "gpd/hecke_algebra.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <memory>
#include <string>
#include <utility>

#include "gpd/degroupoidify.hpp"
#include "gpd/errors.hpp"
#include "gpd/functor.hpp"
#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"
#include "gpd/span.hpp"

namespace gpd::hecke {

namespace {

void normalize(Poly& p) {
  while (!p.coeff.empty() && p.coeff.back() == Rational(0)) p.coeff.pop_back();
}

}  // namespace

Poly Poly::constant(const Rational& c) {
  Poly p{{c}};
  normalize(p);
  return p;
}

Poly Poly::variable() { return Poly{{Rational(0), Rational(1)}}; }

Rational Poly::eval(const Rational& at) const {
  Rational out(0);
  for (std::size_t i = coeff.size(); i-- > 0;) out = out * at + coeff[i];
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()));
  for (std::size_t i = 0; i < out.coeff.size(); ++i) {
    if (i < a.coeff.size()) out.coeff[i] = out.coeff[i] + a.coeff[i];
    if (i < b.coeff.size()) out.coeff[i] = out.coeff[i] + b.coeff[i];
  }
  normalize(out);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.coeff.empty() || b.coeff.empty()) return out;
  out.coeff.resize(a.coeff.size() + b.coeff.size() - 1);
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    for (std::size_t j = 0; j < b.coeff.size(); ++j)
      out.coeff[i + j] = out.coeff[i + j] + a.coeff[i] * b.coeff[j];
  normalize(out);
  return out;
}

std::vector<Rational> tensor_product(const StructureTensor& t, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
  std::vector<Rational> out(6);
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = 0; j < 6; ++j) {
      const Rational prod = a[i] * b[j];
      if (prod == Rational(0)) continue;
      for (std::uint32_t k = 0; k < 6; ++k) out[k] = out[k] + prod * t.at(i, j, k);
    }
  return out;
}

namespace {

// The six classes in label order, as words in the two step kinds.
constexpr std::array<const char*, 6> kWords = {"", "1", "2", "12", "21", "121"};
constexpr std::array<std::uint32_t, 6> kLength = {0, 1, 1, 2, 2, 3};

using StepPerm = std::array<std::uint8_t, 3>;

StepPerm compose_steps(const StepPerm& first, const StepPerm& then) {
  return {then[first[0]], then[first[1]], then[first[2]]};
}

StepPerm step_generator(char letter) {
  if (letter == '1') return {1, 0, 2};
  return {0, 2, 1};
}

std::array<StepPerm, 6> word_perms() {
  std::array<StepPerm, 6> out{};
  for (int w = 0; w < 6; ++w) {
    StepPerm p{0, 1, 2};
    for (const char* c = kWords[w]; *c; ++c) p = compose_steps(p, step_generator(*c));
    out[w] = p;
  }
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (out[a] == out[b]) throw StructuralError("step words collide");
  return out;
}

std::uint32_t perm_index(const std::array<StepPerm, 6>& perms, const StepPerm& p) {
  for (std::uint32_t i = 0; i < 6; ++i)
    if (perms[i] == p) return i;
  throw StructuralError("permutation outside the six step classes");
}

// Left multiplication by one generator in the word algebra: extending a
// word costs nothing, contracting one trades the letter for the quadratic
// identity's two terms.
std::array<Poly, 6> generator_times(char letter, const std::array<StepPerm, 6>& perms,
                                    const std::array<Poly, 6>& v) {
  const Poly q = Poly::variable();
  const Poly q_minus_one = Poly{{Rational(-1), Rational(1)}};
  std::array<Poly, 6> out{};
  for (std::uint32_t w = 0; w < 6; ++w) {
    if (v[w].coeff.empty()) continue;
    const std::uint32_t sw = perm_index(perms, compose_steps(step_generator(letter), perms[w]));
    if (kLength[sw] == kLength[w] + 1) {
      out[sw] = out[sw] + v[w];
    } else {
      out[w] = out[w] + q_minus_one * v[w];
      out[sw] = out[sw] + q * v[w];
    }
  }
  return out;
}

}  // namespace

std::vector<Poly> template_tensor() {
  const std::array<StepPerm, 6> perms = word_perms();
  {
    StepPerm alt{0, 1, 2};
    for (const char c : {'2', '1', '2'}) alt = compose_steps(alt, step_generator(c));
    if (alt != perms[5]) throw StructuralError("the two three-letter words disagree");
  }
  std::vector<Poly> out(216);
  for (std::uint32_t u = 0; u < 6; ++u)
    for (std::uint32_t v = 0; v < 6; ++v) {
      std::array<Poly, 6> vec{};
      vec[v] = Poly::constant(Rational(1));
      const std::string word = kWords[u];
      for (std::size_t pos = word.size(); pos-- > 0;)
        vec = generator_times(word[pos], perms, vec);
      for (std::uint32_t k = 0; k < 6; ++k) out[(u * 6 + v) * 6 + k] = vec[k];
    }
  return out;
}

StructureTensor evaluate_template(const std::vector<Poly>& tmpl, const Rational& at) {
  StructureTensor out;
  for (std::size_t i = 0; i < 216; ++i) out.c[i] = tmpl[i].eval(at);
  return out;
}

StructureTensor coxeter_tensor() {
  const std::array<StepPerm, 6> perms = word_perms();
  StructureTensor out;
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = 0; j < 6; ++j)
      out.at(i, j, perm_index(perms, compose_steps(perms[i], perms[j]))) = Rational(1);
  return out;
}

namespace {

StructureTensor path_counts(const PairOrbits& orbits) {
  const std::uint32_t n = orbits.flags;
  std::array<Relation, 6> indicator;
  for (int cls = 0; cls < 6; ++cls) indicator[cls] = Relation(n);
  for (std::uint32_t f1 = 0; f1 < n; ++f1)
    for (std::uint32_t f2 = 0; f2 < n; ++f2)
      indicator[orbits.class_of[f1 * n + f2]].at(f1, f2) = 1;

  StructureTensor out;
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = 0; j < 6; ++j) {
      // i-steps then j-steps.
      const Relation comp = compose_relations(indicator[j], indicator[i]);
      std::array<std::uint64_t, 6> value{};
      std::array<bool, 6> seen{};
      for (std::uint32_t f1 = 0; f1 < n; ++f1)
        for (std::uint32_t f2 = 0; f2 < n; ++f2) {
          const std::uint32_t k = orbits.class_of[f1 * n + f2];
          const std::uint64_t m = comp.at(f1, f2);
          if (!seen[k]) {
            seen[k] = true;
            value[k] = m;
          } else if (value[k] != m) {
            throw StructuralError("a composite multiplicity varies within one class");
          }
        }
      for (std::uint32_t k = 0; k < 6; ++k)
        out.at(i, j, k) = Rational::from_uint64(seen[k] ? value[k] : 0);
    }
  return out;
}

StructureTensor orbit_span_constants(const PairOrbits& orbits, const OrbitPartition& triples) {
  const std::uint32_t n = orbits.flags;
  StructureTensor out;
  for (std::size_t t = 0; t < triples.reps.size(); ++t) {
    const std::uint32_t rep = triples.reps[t];
    const std::uint32_t a = rep / (n * n), b = rep / n % n, c = rep % n;
    const std::uint32_t i = orbits.class_of[a * n + b];
    const std::uint32_t j = orbits.class_of[b * n + c];
    const std::uint32_t k = orbits.class_of[a * n + c];
    if (orbits.group_order % triples.sizes[t] != 0)
      throw StructuralError("triple orbit size does not divide the group order");
    const std::uint64_t stab = orbits.group_order / triples.sizes[t];
    out.at(i, j, k) =
        out.at(i, j, k) + Rational(static_cast<long>(orbits.stab_orders[i] * orbits.stab_orders[j]),
                                   static_cast<long>(stab));
  }
  return out;
}

// Builds the multiplication span outright: the three-fold action groupoid
// as apex, the pair action groupoid as codomain, and as domain the full
// subgroupoid of the product of two pair groupoids on the objects the apex
// reaches. Checks the resulting matrix entry by entry against the tensor
// computed from orbit data, and the apex class structure against the
// closure partition.
void verify_materialized(const FlagVariety& x, const PairOrbits& orbits,
                         const OrbitPartition& triples, const StructureTensor& span_constants) {
  const PrimeField& field = x.plane().field();
  const std::vector<Mat3> ms = enumerate_sl3(field);
  const std::uint32_t ord = static_cast<std::uint32_t>(ms.size());
  const std::uint32_t nf = x.size();

  std::uint32_t codes = 1;
  for (int i = 0; i < 9; ++i) codes *= field.order();
  std::vector<std::uint32_t> by_code(codes, UINT32_MAX);
  const auto encode = [&](const Mat3& m) {
    std::uint32_t code = 0;
    for (int i = 8; i >= 0; --i) code = code * field.order() + m[i];
    return code;
  };
  for (std::uint32_t i = 0; i < ord; ++i) by_code[encode(ms[i])] = i;

  Group raw;
  raw.order = ord;
  raw.identity = by_code[encode({1, 0, 0, 0, 1, 0, 0, 0, 1})];
  raw.mult.resize(std::size_t{ord} * ord);
  raw.inv.resize(ord);
  for (std::uint32_t a = 0; a < ord; ++a) {
    for (std::uint32_t b = 0; b < ord; ++b)
      raw.mult[a * ord + b] = by_code[encode(mul3(ms[a], ms[b], field))];
    raw.inv[a] = by_code[encode(inverse3(ms[a], field))];
  }
  validate_group(raw);
  const auto group = std::make_shared<const Group>(std::move(raw));

  const std::vector<std::vector<std::uint32_t>> perms = flag_permutations(x, ms);

  const std::uint32_t npair = nf * nf;
  std::vector<std::uint32_t> pair_action(std::size_t{ord} * npair);
  for (std::uint32_t g = 0; g < ord; ++g)
    for (std::uint32_t f1 = 0; f1 < nf; ++f1)
      for (std::uint32_t f2 = 0; f2 < nf; ++f2)
        pair_action[std::size_t{g} * npair + f1 * nf + f2] = perms[g][f1] * nf + perms[g][f2];
  const GroupoidPtr pairs = FiniteGroupoid::from_action(group, npair, std::move(pair_action));

  const std::uint32_t ntr = npair * nf;
  std::vector<std::uint32_t> triple_action(std::size_t{ord} * ntr);
  for (std::uint32_t g = 0; g < ord; ++g)
    for (std::uint32_t t = 0; t < ntr; ++t) {
      const std::uint32_t a = t / npair, b = t / nf % nf, c = t % nf;
      triple_action[std::size_t{g} * ntr + t] =
          (perms[g][a] * nf + perms[g][b]) * nf + perms[g][c];
    }
  const GroupoidPtr apex = FiniteGroupoid::from_action(group, ntr, std::move(triple_action));

  // Apex classes must be the closure orbits, stabilizers included.
  const ClassPartition apex_classes = iso_classes(*apex);
  if (apex_classes.reps != triples.reps || apex_classes.class_of != triples.orbit_of)
    throw StructuralError("apex classes disagree with the closure partition");
  for (std::size_t t = 0; t < triples.reps.size(); ++t)
    if (apex->aut_order(triples.reps[t]) != orbits.group_order / triples.sizes[t])
      throw StructuralError("an apex automorphism count disagrees with its stabilizer");

  Functor outer;
  outer.source = apex;
  outer.target = pairs;
  outer.obj.resize(ntr);
  outer.mor.resize(std::size_t{ntr} * ord);
  for (std::uint32_t t = 0; t < ntr; ++t) {
    outer.obj[t] = t / npair * nf + t % nf;
    for (std::uint32_t g = 0; g < ord; ++g)
      outer.mor[std::size_t{t} * ord + g] = outer.obj[t] * ord + g;
  }

  // Stabilizers of single flags, for the compatible second components.
  std::vector<std::vector<std::uint32_t>> stab(nf);
  for (std::uint32_t s = 0; s < ord; ++s)
    for (std::uint32_t b = 0; b < nf; ++b)
      if (perms[s][b] == b) stab[b].push_back(s);
  const std::uint32_t stabsz = static_cast<std::uint32_t>(stab[0].size());
  for (std::uint32_t b = 0; b < nf; ++b)
    if (stab[b].size() != stabsz) throw StructuralError("flag stabilizer sizes differ");

  // hs[b][g]: the elements h with h.b == g.b, ascending; diag[b][g]: where
  // g itself sits in that list.
  std::vector<std::uint32_t> hs(std::size_t{nf} * ord * stabsz);
  std::vector<std::uint32_t> diag(std::size_t{nf} * ord);
  for (std::uint32_t b = 0; b < nf; ++b)
    for (std::uint32_t g = 0; g < ord; ++g) {
      std::uint32_t* slot = hs.data() + (std::size_t{b} * ord + g) * stabsz;
      for (std::uint32_t s = 0; s < stabsz; ++s) slot[s] = group->times(g, stab[b][s]);
      std::sort(slot, slot + stabsz);
      const std::uint32_t* hit = std::find(slot, slot + stabsz, g);
      if (hit == slot + stabsz) throw StructuralError("an element misses its own coset list");
      diag[std::size_t{b} * ord + g] = static_cast<std::uint32_t>(hit - slot);
    }

  const std::size_t total = std::size_t{ntr} * ord * stabsz;
  std::vector<ObjId> src(total), tgt(total);
  std::vector<MorId> left_part(total), right_part(total), identity(ntr);
  for (std::uint32_t t = 0; t < ntr; ++t) {
    const std::uint32_t a = t / npair, b = t / nf % nf, c = t % nf;
    const std::uint32_t pair1 = a * nf + b, pair2 = b * nf + c;
    const std::size_t base = std::size_t{t} * ord * stabsz;
    identity[t] =
        static_cast<MorId>(base + std::size_t{group->identity} * stabsz +
                           diag[std::size_t{b} * ord + group->identity]);
    for (std::uint32_t g = 0; g < ord; ++g) {
      const std::uint32_t a2 = perms[g][a], b2 = perms[g][b];
      const std::uint32_t* slot = hs.data() + (std::size_t{b} * ord + g) * stabsz;
      for (std::uint32_t hi = 0; hi < stabsz; ++hi) {
        const std::size_t m = base + std::size_t{g} * stabsz + hi;
        src[m] = t;
        tgt[m] = (a2 * nf + b2) * nf + perms[slot[hi]][c];
        left_part[m] = pair1 * ord + g;
        right_part[m] = pair2 * ord + slot[hi];
      }
    }
  }
  const GroupoidPtr domain =
      FiniteGroupoid::pair_product(pairs, pairs, ntr, std::move(src), std::move(tgt),
                                   std::move(identity), std::move(left_part),
                                   std::move(right_part), false);

  Functor inner;
  inner.source = apex;
  inner.target = domain;
  inner.obj.resize(ntr);
  inner.mor.resize(std::size_t{ntr} * ord);
  for (std::uint32_t t = 0; t < ntr; ++t) {
    inner.obj[t] = t;
    const std::uint32_t b = t / nf % nf;
    for (std::uint32_t g = 0; g < ord; ++g)
      inner.mor[std::size_t{t} * ord + g] = static_cast<MorId>(
          std::size_t{t} * ord * stabsz + std::size_t{g} * stabsz + diag[std::size_t{b} * ord + g]);
  }

  // A full functoriality sweep would visit every composable pair of the
  // apex, a quarter of a billion of them. Endpoints and identities are
  // checked everywhere; composition on all pairs at a spread of source
  // objects, which covers every orbit and every group element.
  const auto check_leg = [&](const Functor& leg) {
    const FiniteGroupoid& source = *leg.source;
    const FiniteGroupoid& target = *leg.target;
    for (MorId m = 0; m < source.num_morphisms(); ++m)
      if (target.src(leg.mor[m]) != leg.obj[source.src(m)] ||
          target.tgt(leg.mor[m]) != leg.obj[source.tgt(m)])
        throw StructuralError("a span leg breaks endpoints");
    for (ObjId t = 0; t < source.num_objects(); ++t)
      if (leg.mor[source.identity(t)] != target.identity(leg.obj[t]))
        throw StructuralError("a span leg breaks an identity");
    std::vector<ObjId> spots(triples.reps.begin(), triples.reps.end());
    for (ObjId t = 0; t < source.num_objects(); t += 97) spots.push_back(t);
    for (const ObjId t : spots)
      for (const MorId a : source.morphisms_from(t))
        for (const MorId b : source.morphisms_from(source.tgt(a)))
          if (leg.mor[source.compose_unchecked(b, a)] !=
              target.compose_unchecked(leg.mor[b], leg.mor[a]))
            throw StructuralError("a span leg breaks composition");
  };
  check_leg(outer);
  check_leg(inner);

  const ClassTable ct_pairs = class_table(pairs);
  if (ct_pairs.rows() != 6) throw StructuralError("pair groupoid class count is not six");
  const ClassTable ct_domain = class_table(domain);
  if (ct_domain.rows() != 36) throw StructuralError("domain class count is not thirty-six");

  std::array<std::uint32_t, 6> row_of;
  row_of.fill(UINT32_MAX);
  for (std::uint32_t r = 0; r < 6; ++r) {
    const std::uint32_t k = orbits.class_of[ct_pairs.classes.reps[r]];
    if (row_of[k] != UINT32_MAX) throw StructuralError("two pair classes share a label");
    row_of[k] = r;
  }
  std::array<std::array<std::uint32_t, 6>, 6> col_of;
  for (auto& row : col_of) row.fill(UINT32_MAX);
  for (std::uint32_t col = 0; col < 36; ++col) {
    const std::uint32_t rep = ct_domain.classes.reps[col];
    const std::uint32_t a = rep / npair, b = rep / nf % nf, c = rep % nf;
    const std::uint32_t i = orbits.class_of[a * nf + b];
    const std::uint32_t j = orbits.class_of[b * nf + c];
    if (col_of[i][j] != UINT32_MAX) throw StructuralError("two domain classes share leg labels");
    col_of[i][j] = col;
  }

  const Span multiplication{outer, inner};
  const RationalMatrix matrix = matrix_of(ct_pairs, ct_domain, multiplication);
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = 0; j < 6; ++j)
      for (std::uint32_t k = 0; k < 6; ++k)
        if (matrix.at(row_of[k], col_of[i][j]) != span_constants.at(i, j, k))
          throw StructuralError("the materialized span disagrees with the orbit constants");
}

}  // namespace

HeckeAlgebraData hecke_algebra(std::uint32_t q) {
  if (q != 2 && q != 3)
    throw BoundError("the multiplication pipeline needs the enumerated group; q must be 2 or 3");
  HeckeAlgebraData out;
  out.q = q;
  out.orbits = sl3_orbits(q);
  const FlagVariety x(q);
  const std::uint32_t n = x.size();

  out.counts = path_counts(out.orbits);

  const OrbitPartition triples = triple_orbit_closure(flag_permutations(x, sl3_generators()), n);
  out.triple_orbit_count = triples.reps.size();
  out.span_constants = orbit_span_constants(out.orbits, triples);

  out.unit_laws = true;
  for (std::uint32_t j = 0; j < 6 && out.unit_laws; ++j)
    for (std::uint32_t k = 0; k < 6; ++k) {
      const Rational expect(j == k ? 1 : 0);
      if (out.counts.at(0, j, k) != expect || out.counts.at(j, 0, k) != expect) {
        out.unit_laws = false;
        break;
      }
    }

  out.quadratic = true;
  for (const std::uint32_t g : {1u, 2u})
    for (std::uint32_t k = 0; k < 6; ++k) {
      const Rational expect(k == g ? static_cast<long>(q - 1) : k == 0 ? static_cast<long>(q) : 0);
      if (out.counts.at(g, g, k) != expect) out.quadratic = false;
    }

  std::vector<Rational> basis_p(6), basis_l(6);
  basis_p[1] = Rational(1);
  basis_l[2] = Rational(1);
  const auto prod = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return tensor_product(out.counts, a, b);
  };
  out.braid = prod(prod(basis_p, basis_l), basis_p) == prod(prod(basis_l, basis_p), basis_l);

  out.associative = true;
  for (std::uint32_t i = 0; i < 6 && out.associative; ++i)
    for (std::uint32_t j = 0; j < 6 && out.associative; ++j)
      for (std::uint32_t k = 0; k < 6 && out.associative; ++k)
        for (std::uint32_t l = 0; l < 6; ++l) {
          Rational lhs(0), rhs(0);
          for (std::uint32_t m = 0; m < 6; ++m) {
            lhs = lhs + out.counts.at(i, j, m) * out.counts.at(m, k, l);
            rhs = rhs + out.counts.at(j, k, m) * out.counts.at(i, m, l);
          }
          if (lhs != rhs) {
            out.associative = false;
            break;
          }
        }

  out.reconciled = true;
  for (std::uint32_t i = 0; i < 6 && out.reconciled; ++i)
    for (std::uint32_t j = 0; j < 6 && out.reconciled; ++j)
      for (std::uint32_t k = 0; k < 6; ++k) {
        const Rational ratio(
            static_cast<long>(out.orbits.stab_orders[i] * out.orbits.stab_orders[j]),
            static_cast<long>(out.orbits.stab_orders[k]));
        if (out.span_constants.at(i, j, k) != out.counts.at(i, j, k) * ratio) {
          out.reconciled = false;
          break;
        }
      }

  if (q == 2) {
    verify_materialized(x, out.orbits, triples, out.span_constants);
    out.materialized = true;
  }
  return out;
}

}  // namespace gpd::hecke
