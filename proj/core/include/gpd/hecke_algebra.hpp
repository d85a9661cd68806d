#pragma once

#include <cstdint>
#include <vector>

#include "gpd/hecke_orbits.hpp"
#include "gpd/rational.hpp"

namespace gpd::hecke {

// Polynomial in one variable with rational coefficients, constant term
// first, no trailing zeros. Just enough arithmetic for the multiplication
// templates.
struct Poly {
  std::vector<Rational> coeff;

  static Poly constant(const Rational& c);
  static Poly variable();

  Rational eval(const Rational& at) const;

  bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// Multiplication tensor over the six pair classes in their label order:
// at(i, j, k) is the coefficient of class k in the product "class i steps,
// then class j steps".
struct StructureTensor {
  std::vector<Rational> c;

  StructureTensor() : c(216) {}

  Rational& at(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    return c[(i * 6 + j) * 6 + k];
  }
  const Rational& at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return c[(i * 6 + j) * 6 + k];
  }

  bool operator==(const StructureTensor&) const = default;
};

// Product of two coefficient vectors in the tensor's algebra.
std::vector<Rational> tensor_product(const StructureTensor& t, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b);

// Everything the multiplication pipeline produces for one field size.
//
// counts holds the path-count constants: entry (i, j, k) is the number of
// middle flags turning a fixed class-k pair into an i-pair followed by a
// j-pair, a number independent of the chosen pair. span_constants holds the
// constants of the three-fold multiplication span, where basis class w is
// the state concentrated on one representative pair; the two are related
// entrywise by the stabilizer ratio |stab_i||stab_j| / |stab_k|, and the
// reconciled flag records that the relation holds exactly. At q = 2 the
// span constants are additionally recomputed from fully materialized
// groupoids and functors (materialized = true); above that the span is
// evaluated through orbit representatives and stabilizer orders alone.
struct HeckeAlgebraData {
  std::uint32_t q = 0;
  PairOrbits orbits;
  StructureTensor counts;
  StructureTensor span_constants;
  std::uint64_t triple_orbit_count = 0;
  bool materialized = false;
  bool unit_laws = false;
  bool quadratic = false;
  bool braid = false;
  bool associative = false;
  bool reconciled = false;

  bool ok() const { return unit_laws && quadratic && braid && associative && reconciled; }
};

// Full pipeline; the group enumeration bound restricts q to 2 or 3.
HeckeAlgebraData hecke_algebra(std::uint32_t q);

// The counts tensor with the field size symbolic, derived from the step
// recursion on reduced words: multiplying by a generator either extends the
// word or contracts it against the quadratic identity. Layout matches
// StructureTensor.
std::vector<Poly> template_tensor();

StructureTensor evaluate_template(const std::vector<Poly>& tmpl, const Rational& at);

// Multiplication table of the six step permutations themselves: the
// template collapses to it at one, where both quadratic coefficients
// degenerate to a plain involution.
StructureTensor coxeter_tensor();

}  // namespace gpd::hecke
