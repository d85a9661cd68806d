#include "gpd/degroupoidify.hpp"

#include "gpd/builders.hpp"
#include "gpd/errors.hpp"

namespace gpd {

ClassTable class_table(GroupoidPtr base) {
  ClassTable t;
  t.base = std::move(base);
  t.classes = iso_classes(*t.base);
  t.aut.reserve(t.classes.reps.size());
  for (ObjId rep : t.classes.reps) t.aut.push_back(t.base->aut_order(rep));
  return t;
}

GroupoidOver point_state(GroupoidPtr base, ObjId x) {
  if (x >= base->num_objects()) throw DomainError("point state object out of range");
  SubgroupoidResult sub = full_subgroupoid(base, {x});
  return GroupoidOver{std::move(sub.include)};
}

RationalVector vector_of(const ClassTable& table, const GroupoidOver& over) {
  if (over.projection.target.get() != table.base.get() &&
      !same_shape(*over.projection.target, *table.base))
    throw DomainError("state does not live over the table's base");
  const FiniteGroupoid& total = *over.projection.source;
  RationalVector out(table.rows());
  // One representative per isomorphism class: the entry is the cardinality
  // of the part of the total sitting over the class, which object counting
  // would overstate whenever the total is not skeletal.
  for (ObjId rep : iso_classes(total).reps)
    out[table.row_of(over.projection.obj[rep])] += Rational::unit_fraction(total.aut_order(rep));
  return out;
}

RationalMatrix matrix_of(const ClassTable& codomain, const ClassTable& domain, const Span& s) {
  if (s.left.target.get() != codomain.base.get() && !same_shape(*s.left.target, *codomain.base))
    throw DomainError("span codomain does not match the row table");
  if (s.right.target.get() != domain.base.get() && !same_shape(*s.right.target, *domain.base))
    throw DomainError("span domain does not match the column table");
  const GroupoidPtr top = apex(s);
  const ClassPartition classes = iso_classes(*top);
  RationalMatrix out(codomain.rows(), domain.rows());
  for (ObjId rep : classes.reps) {
    const std::size_t row = codomain.row_of(s.left.obj[rep]);
    const std::size_t col = domain.row_of(s.right.obj[rep]);
    out.at(row, col) +=
        Rational::from_uint64(domain.aut[col]) * Rational::unit_fraction(top->aut_order(rep));
  }
  return out;
}

RationalMatrix matrix_by_columns(const ClassTable& codomain, const ClassTable& domain,
                                 const Span& s, const SpanOptions& options) {
  RationalMatrix out(codomain.rows(), domain.rows());
  for (std::size_t col = 0; col < domain.rows(); ++col) {
    const GroupoidOver state = point_state(domain.base, domain.classes.reps[col]);
    const RationalVector image = vector_of(codomain, apply_span(s, state, options));
    const Rational scale = Rational::from_uint64(domain.aut[col]);
    for (std::size_t row = 0; row < codomain.rows(); ++row)
      out.at(row, col) = scale * image[row];
  }
  return out;
}

Rational inner_product(const GroupoidOver& a, const GroupoidOver& b) {
  const FiniteGroupoid& base = *a.projection.target;
  if (b.projection.target.get() != a.projection.target.get() &&
      !same_shape(*b.projection.target, base))
    throw DomainError("inner product needs states over one base");
  const FiniteGroupoid& ta = *a.projection.source;
  const FiniteGroupoid& tb = *b.projection.source;
  const ClassPartition ca = iso_classes(ta);
  const ClassPartition cb = iso_classes(tb);

  // Comparison-groupoid cardinality, summed class by class: each pair of
  // representatives contributes its base hom count over both automorphism
  // group orders, because the automorphism pairs act on that hom set with
  // uniform quotient weight.
  Rational sum;
  for (ObjId ra : ca.reps) {
    const std::uint64_t auts_a = ta.aut_order(ra);
    for (ObjId rb : cb.reps) {
      const std::size_t h = base.hom(a.projection.obj[ra], b.projection.obj[rb]).size();
      if (h == 0) continue;
      sum += Rational::from_uint64(h) /
             (Rational::from_uint64(auts_a) * Rational::from_uint64(tb.aut_order(rb)));
    }
  }
  return sum;
}

Rational pairing(const ClassTable& table, const RationalVector& a, const RationalVector& b) {
  if (a.size() != table.rows() || b.size() != table.rows())
    throw DomainError("pairing dimension mismatch");
  Rational sum;
  for (std::size_t i = 0; i < table.rows(); ++i)
    sum += Rational::from_uint64(table.aut[i]) * a[i] * b[i];
  return sum;
}

RationalVector generating_function(const ClassTable& table, const GroupoidOver& over,
                                   std::size_t max_degree) {
  if (max_degree + 1 > table.base->num_objects())
    throw DomainError("series degree exceeds the base");
  const RationalVector v = vector_of(table, over);
  RationalVector out(max_degree + 1);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t row = table.row_of(static_cast<ObjId>(n));
    if (table.classes.reps[row] != static_cast<ObjId>(n))
      throw DomainError("series base must have one object per class, in degree order");
    out[n] = v[row];
  }
  return out;
}

}  // namespace gpd
