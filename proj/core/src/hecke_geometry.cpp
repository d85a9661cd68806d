#include "gpd/hecke_geometry.hpp"

#include <algorithm>

#include "gpd/errors.hpp"

namespace gpd::hecke {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t dot(const Vec3& a, const Vec3& b, const PrimeField& f) {
  std::uint32_t s = 0;
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Vec3 cross(const Vec3& a, const Vec3& b, const PrimeField& f) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
          f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw DomainError("field modulus " + std::to_string(p) +
                      " is not prime; only prime moduli are supported");
  if (p > 7) throw DomainError("field modulus " + std::to_string(p) + " exceeds the bound of 7");
  inv_.assign(p, 0);
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b)
      if (a * b % p == 1) inv_[a] = b;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw DomainError("zero has no inverse");
  return inv_[a % p_];
}

std::uint32_t det3(const Mat3& m, const PrimeField& f) {
  std::uint32_t d = 0;
  d = f.add(d, f.mul(m[0], f.sub(f.mul(m[4], m[8]), f.mul(m[5], m[7]))));
  d = f.sub(d, f.mul(m[1], f.sub(f.mul(m[3], m[8]), f.mul(m[5], m[6]))));
  d = f.add(d, f.mul(m[2], f.sub(f.mul(m[3], m[7]), f.mul(m[4], m[6]))));
  return d;
}

Mat3 mul3(const Mat3& a, const Mat3& b, const PrimeField& f) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint32_t s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i * 3 + k], b[k * 3 + j]));
      out[i * 3 + j] = s;
    }
  return out;
}

Mat3 transpose3(const Mat3& m) {
  return {m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]};
}

Mat3 inverse3(const Mat3& m, const PrimeField& f) {
  const std::uint32_t d = det3(m, f);
  if (d == 0) throw DomainError("matrix is singular");
  const std::uint32_t s = f.inv(d);
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r1 = (j + 1) % 3, r2 = (j + 2) % 3;
      const int c1 = (i + 1) % 3, c2 = (i + 2) % 3;
      const std::uint32_t cof = f.sub(f.mul(m[r1 * 3 + c1], m[r2 * 3 + c2]),
                                      f.mul(m[r1 * 3 + c2], m[r2 * 3 + c1]));
      out[i * 3 + j] = f.mul(s, cof);
    }
  return out;
}

Vec3 apply3(const Mat3& m, const Vec3& v, const PrimeField& f) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    std::uint32_t s = 0;
    for (int j = 0; j < 3; ++j) s = f.add(s, f.mul(m[i * 3 + j], v[j]));
    out[i] = s;
  }
  return out;
}

ProjectivePlane::ProjectivePlane(std::uint32_t q) : field_(q) {
  // Scale representatives in lexicographic order: exactly the triples whose
  // first nonzero coordinate is already 1.
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        const Vec3 v{a, b, c};
        std::uint32_t lead = 0;
        while (lead < 3 && v[lead] == 0) ++lead;
        if (lead == 3 || v[lead] != 1) continue;
        reps_.push_back(v);
      }
  const std::uint32_t n = num_points();
  if (n != q * q + q + 1) throw StructuralError("projective point count is off");

  incidence_.assign(std::uint64_t{n} * n, 0);
  points_on_.assign(n, {});
  lines_through_.assign(n, {});
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t l = 0; l < n; ++l)
      if (dot(reps_[p], reps_[l], field_) == 0) {
        incidence_[p * n + l] = 1;
        points_on_[l].push_back(p);
        lines_through_[p].push_back(l);
      }

  for (std::uint32_t l = 0; l < n; ++l)
    if (points_on_[l].size() != q + 1)
      throw StructuralError("a line carries the wrong number of points");
  for (std::uint32_t p = 0; p < n; ++p)
    if (lines_through_[p].size() != q + 1)
      throw StructuralError("a point lies on the wrong number of lines");
  for (std::uint32_t p1 = 0; p1 < n; ++p1)
    for (std::uint32_t p2 = p1 + 1; p2 < n; ++p2) {
      std::uint32_t common = 0;
      for (const std::uint32_t l : lines_through_[p1])
        if (incident(p2, l)) ++common;
      if (common != 1) throw StructuralError("two distinct points fail to span a unique line");
      if (join(p1, p2) >= n || !incident(p1, join(p1, p2)) || !incident(p2, join(p1, p2)))
        throw StructuralError("the joining line misses its points");
    }
  for (std::uint32_t l1 = 0; l1 < n; ++l1)
    for (std::uint32_t l2 = l1 + 1; l2 < n; ++l2) {
      std::uint32_t common = 0;
      for (const std::uint32_t p : points_on_[l1])
        if (incident(p, l2)) ++common;
      if (common != 1) throw StructuralError("two distinct lines fail to meet in a unique point");
      if (!incident(meet(l1, l2), l1) || !incident(meet(l1, l2), l2))
        throw StructuralError("the meeting point misses its lines");
    }
}

std::uint32_t ProjectivePlane::point_id(const Vec3& v) const {
  std::uint32_t lead = 0;
  while (lead < 3 && v[lead] % field_.order() == 0) ++lead;
  if (lead == 3) throw DomainError("the zero vector names no projective point");
  const std::uint32_t s = field_.inv(v[lead]);
  Vec3 norm{};
  for (int i = 0; i < 3; ++i) norm[i] = field_.mul(s, v[i] % field_.order());
  for (std::uint32_t id = 0; id < reps_.size(); ++id)
    if (reps_[id] == norm) return id;
  throw StructuralError("normalized vector missing from the representative list");
}

std::uint32_t ProjectivePlane::line_id(const Vec3& v) const { return point_id(v); }

std::uint32_t ProjectivePlane::join(std::uint32_t p1, std::uint32_t p2) const {
  if (p1 == p2) throw DomainError("join needs two distinct points");
  return line_id(cross(reps_[p1], reps_[p2], field_));
}

std::uint32_t ProjectivePlane::meet(std::uint32_t l1, std::uint32_t l2) const {
  if (l1 == l2) throw DomainError("meet needs two distinct lines");
  return point_id(cross(reps_[l1], reps_[l2], field_));
}

std::uint32_t ProjectivePlane::transform_point(const Mat3& m, std::uint32_t point) const {
  return point_id(apply3(m, reps_[point], field_));
}

std::uint32_t ProjectivePlane::transform_line(const Mat3& m, std::uint32_t line) const {
  return line_id(apply3(transpose3(inverse3(m, field_)), reps_[line], field_));
}

FlagVariety::FlagVariety(std::uint32_t q) : plane_(q) {
  const std::uint32_t n = plane_.num_points();
  id_.assign(std::uint64_t{n} * n, UINT32_MAX);
  for (std::uint32_t p = 0; p < n; ++p)
    for (const std::uint32_t l : plane_.lines_through(p)) {
      id_[p * n + l] = static_cast<std::uint32_t>(point_of_.size());
      point_of_.push_back(p);
      line_of_.push_back(l);
    }
  if (point_of_.size() != std::size_t{q * q + q + 1} * (q + 1))
    throw StructuralError("flag count is off");
}

std::uint32_t FlagVariety::flag_id(std::uint32_t point, std::uint32_t line) const {
  const std::uint32_t id = id_[point * plane_.num_points() + line];
  if (id == UINT32_MAX) throw DomainError("the point does not lie on the line");
  return id;
}

std::uint32_t FlagVariety::transform_flag(const Mat3& m, std::uint32_t flag) const {
  return flag_id(plane_.transform_point(m, point_of_[flag]),
                 plane_.transform_line(m, line_of_[flag]));
}

std::uint64_t Relation::total() const {
  std::uint64_t s = 0;
  for (const std::uint64_t m : mult) s += m;
  return s;
}

Relation identity_relation(std::uint32_t size) {
  Relation r(size);
  for (std::uint32_t i = 0; i < size; ++i) r.at(i, i) = 1;
  return r;
}

Relation point_relation(const FlagVariety& x) {
  Relation r(x.size());
  const ProjectivePlane& plane = x.plane();
  for (std::uint32_t l = 0; l < plane.num_lines(); ++l)
    for (const std::uint32_t p1 : plane.points_on(l))
      for (const std::uint32_t p2 : plane.points_on(l))
        if (p1 != p2) r.at(x.flag_id(p1, l), x.flag_id(p2, l)) = 1;
  return r;
}

Relation line_relation(const FlagVariety& x) {
  Relation r(x.size());
  const ProjectivePlane& plane = x.plane();
  for (std::uint32_t p = 0; p < plane.num_points(); ++p)
    for (const std::uint32_t l1 : plane.lines_through(p))
      for (const std::uint32_t l2 : plane.lines_through(p))
        if (l1 != l2) r.at(x.flag_id(p, l1), x.flag_id(p, l2)) = 1;
  return r;
}

Relation compose_relations(const Relation& second, const Relation& first) {
  if (first.size != second.size) throw DomainError("relation sizes differ");
  const std::uint32_t n = first.size;
  Relation out(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint64_t m = first.at(a, b);
      if (m == 0) continue;
      for (std::uint32_t c = 0; c < n; ++c) out.at(a, c) += m * second.at(b, c);
    }
  return out;
}

Relation add_relations(const Relation& a, const Relation& b) {
  if (a.size != b.size) throw DomainError("relation sizes differ");
  Relation out(a.size);
  for (std::size_t i = 0; i < out.mult.size(); ++i) out.mult[i] = a.mult[i] + b.mult[i];
  return out;
}

Relation scale_relation(std::uint64_t k, const Relation& r) {
  Relation out(r.size);
  for (std::size_t i = 0; i < out.mult.size(); ++i) out.mult[i] = k * r.mult[i];
  return out;
}

std::vector<BraidPath> plp_paths(const FlagVariety& x) {
  std::vector<BraidPath> out;
  const ProjectivePlane& plane = x.plane();
  for (std::uint32_t start = 0; start < x.size(); ++start) {
    const std::uint32_t p1 = x.point_of(start), l1 = x.line_of(start);
    for (const std::uint32_t p2 : plane.points_on(l1)) {
      if (p2 == p1) continue;
      for (const std::uint32_t l2 : plane.lines_through(p2)) {
        if (l2 == l1) continue;
        for (const std::uint32_t p3 : plane.points_on(l2)) {
          if (p3 == p2) continue;
          out.push_back(
              {start, x.flag_id(p2, l1), x.flag_id(p2, l2), x.flag_id(p3, l2)});
        }
      }
    }
  }
  return out;
}

std::vector<BraidPath> lpl_paths(const FlagVariety& x) {
  std::vector<BraidPath> out;
  const ProjectivePlane& plane = x.plane();
  for (std::uint32_t start = 0; start < x.size(); ++start) {
    const std::uint32_t p1 = x.point_of(start), l1 = x.line_of(start);
    for (const std::uint32_t l2 : plane.lines_through(p1)) {
      if (l2 == l1) continue;
      for (const std::uint32_t p2 : plane.points_on(l2)) {
        if (p2 == p1) continue;
        for (const std::uint32_t l3 : plane.lines_through(p2)) {
          if (l3 == l2) continue;
          out.push_back(
              {start, x.flag_id(p1, l2), x.flag_id(p2, l2), x.flag_id(p2, l3)});
        }
      }
    }
  }
  return out;
}

BraidPath braid_partner(const FlagVariety& x, const BraidPath& plp) {
  const std::uint32_t p1 = x.point_of(plp.flags[0]), l1 = x.line_of(plp.flags[0]);
  const std::uint32_t p3 = x.point_of(plp.flags[3]), l2 = x.line_of(plp.flags[3]);
  // Were the outer points equal they would both lie on the two distinct
  // lines, forcing them onto the walk's middle point, which a point step
  // rules out.
  const std::uint32_t mid = x.plane().join(p1, p3);
  return {plp.flags[0], x.flag_id(p1, mid), x.flag_id(p3, mid), plp.flags[3]};
}

namespace {

bool point_step(const FlagVariety& x, std::uint32_t from, std::uint32_t to) {
  return x.line_of(from) == x.line_of(to) && x.point_of(from) != x.point_of(to);
}

bool line_step(const FlagVariety& x, std::uint32_t from, std::uint32_t to) {
  return x.point_of(from) == x.point_of(to) && x.line_of(from) != x.line_of(to);
}

bool valid_lpl(const FlagVariety& x, const BraidPath& w) {
  return line_step(x, w.flags[0], w.flags[1]) && point_step(x, w.flags[1], w.flags[2]) &&
         line_step(x, w.flags[2], w.flags[3]);
}

BraidPath transform_path(const FlagVariety& x, const Mat3& m, const BraidPath& w) {
  BraidPath out{};
  for (int i = 0; i < 4; ++i) out.flags[i] = x.transform_flag(m, w.flags[i]);
  return out;
}

}  // namespace

GeometricReport verify_geometric_relations(std::uint32_t q) {
  GeometricReport rep;
  rep.q = q;
  const FlagVariety x(q);
  rep.flags = x.size();

  const Relation one = identity_relation(x.size());
  const Relation p = point_relation(x);
  const Relation l = line_relation(x);
  rep.point_pairs = p.total();
  rep.line_pairs = l.total();

  rep.quadratic_point =
      compose_relations(p, p) == add_relations(scale_relation(q - 1, p), scale_relation(q, one));
  if (!rep.quadratic_point) rep.notes.push_back("point quadratic identity fails");
  rep.quadratic_line =
      compose_relations(l, l) == add_relations(scale_relation(q - 1, l), scale_relation(q, one));
  if (!rep.quadratic_line) rep.notes.push_back("line quadratic identity fails");

  const Relation plp_rel = compose_relations(p, compose_relations(l, p));
  const Relation lpl_rel = compose_relations(l, compose_relations(p, l));
  rep.braid_fibers = plp_rel == lpl_rel;
  if (!rep.braid_fibers) rep.notes.push_back("braid composites differ on some fiber");

  const std::vector<BraidPath> plp = plp_paths(x);
  const std::vector<BraidPath> lpl = lpl_paths(x);
  std::vector<BraidPath> lpl_sorted = lpl;
  std::sort(lpl_sorted.begin(), lpl_sorted.end());
  std::vector<BraidPath> partners;
  partners.reserve(plp.size());
  bool mapped_ok = true;
  for (const BraidPath& w : plp) {
    const BraidPath partner = braid_partner(x, w);
    if (!valid_lpl(x, partner) || partner.flags[0] != w.flags[0] ||
        partner.flags[3] != w.flags[3] ||
        !std::binary_search(lpl_sorted.begin(), lpl_sorted.end(), partner))
      mapped_ok = false;
    partners.push_back(partner);
  }
  std::sort(partners.begin(), partners.end());
  const bool injective = std::adjacent_find(partners.begin(), partners.end()) == partners.end();
  // The partner map preserves endpoints, so injectivity plus equal totals
  // forces a bijection fiber by fiber.
  rep.braid_bijection = mapped_ok && injective && plp.size() == lpl.size();
  if (!rep.braid_bijection) rep.notes.push_back("endpoint bijection between walk families fails");

  const std::vector<Mat3> samples = {
      {1, 1, 0, 0, 1, 0, 0, 0, 1},
      {1, 0, 0, 0, 1, 1, 0, 0, 1},
      {1, 0, 0, 0, 1, 0, 1, 0, 1},
      {0, 0, 1, 1, 0, 0, 0, 1, 0},
  };
  rep.equivariant = true;
  for (const Mat3& m : samples) {
    if (det3(m, x.plane().field()) != 1)
      throw StructuralError("equivariance sample has determinant other than one");
    for (const BraidPath& w : plp)
      if (braid_partner(x, transform_path(x, m, w)) !=
          transform_path(x, m, braid_partner(x, w))) {
        rep.equivariant = false;
        break;
      }
    if (!rep.equivariant) break;
  }
  if (!rep.equivariant) rep.notes.push_back("partner map fails equivariance under a sample matrix");

  return rep;
}

}  // namespace gpd::hecke
