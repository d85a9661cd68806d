#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gpd::hecke {

// Arithmetic modulo a prime, elements 0..p-1. Small moduli only; inverses
// are precomputed. Non-prime or oversized moduli are rejected.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t order() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return (p_ - a) % p_; }

  // Throws DomainError at zero.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
};

using Vec3 = std::array<std::uint32_t, 3>;
using Mat3 = std::array<std::uint32_t, 9>;  // row-major

std::uint32_t det3(const Mat3& m, const PrimeField& f);
Mat3 mul3(const Mat3& a, const Mat3& b, const PrimeField& f);
Mat3 transpose3(const Mat3& m);

// Inverse via the adjugate; throws DomainError when the determinant is zero.
Mat3 inverse3(const Mat3& m, const PrimeField& f);

Vec3 apply3(const Mat3& m, const Vec3& v, const PrimeField& f);

// The projective plane over F_q. Points and lines are nonzero triples up to
// scale, normalized so the first nonzero coordinate is 1; a point lies on a
// line when their dot product vanishes. Construction verifies the incidence
// axioms outright: q+1 points per line, q+1 lines per point, a unique line
// through two distinct points and a unique point on two distinct lines.
class ProjectivePlane {
 public:
  explicit ProjectivePlane(std::uint32_t q);

  const PrimeField& field() const { return field_; }
  std::uint32_t num_points() const { return static_cast<std::uint32_t>(reps_.size()); }
  std::uint32_t num_lines() const { return static_cast<std::uint32_t>(reps_.size()); }
  const Vec3& point(std::uint32_t id) const { return reps_[id]; }
  const Vec3& line(std::uint32_t id) const { return reps_[id]; }

  // Normalize an arbitrary nonzero triple to its id; zero is a DomainError.
  std::uint32_t point_id(const Vec3& v) const;
  std::uint32_t line_id(const Vec3& v) const;

  bool incident(std::uint32_t point, std::uint32_t line) const {
    return incidence_[point * reps_.size() + line] != 0;
  }
  const std::vector<std::uint32_t>& points_on(std::uint32_t line) const {
    return points_on_[line];
  }
  const std::vector<std::uint32_t>& lines_through(std::uint32_t point) const {
    return lines_through_[point];
  }

  // The line through two distinct points; DomainError on equal arguments.
  std::uint32_t join(std::uint32_t p1, std::uint32_t p2) const;
  // The common point of two distinct lines.
  std::uint32_t meet(std::uint32_t l1, std::uint32_t l2) const;

  // Image of a point under an invertible matrix, and of a line under the
  // same matrix (computed through the inverse transpose, so incidence is
  // preserved).
  std::uint32_t transform_point(const Mat3& m, std::uint32_t point) const;
  std::uint32_t transform_line(const Mat3& m, std::uint32_t line) const;

 private:
  PrimeField field_;
  std::vector<Vec3> reps_;
  std::vector<std::uint8_t> incidence_;
  std::vector<std::vector<std::uint32_t>> points_on_;
  std::vector<std::vector<std::uint32_t>> lines_through_;
};

// Complete flags: incident point-line pairs, ordered by (point, line).
class FlagVariety {
 public:
  explicit FlagVariety(std::uint32_t q);

  const ProjectivePlane& plane() const { return plane_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(point_of_.size()); }
  std::uint32_t point_of(std::uint32_t flag) const { return point_of_[flag]; }
  std::uint32_t line_of(std::uint32_t flag) const { return line_of_[flag]; }

  // DomainError when the pair is not incident.
  std::uint32_t flag_id(std::uint32_t point, std::uint32_t line) const;

  std::uint32_t transform_flag(const Mat3& m, std::uint32_t flag) const;

 private:
  ProjectivePlane plane_;
  std::vector<std::uint32_t> point_of_;
  std::vector<std::uint32_t> line_of_;
  std::vector<std::uint32_t> id_;  // point * num_lines + line, or UINT32_MAX
};

// Binary relation on a finite set, with multiplicities so composites can
// count paths. mult[from * size + to]; plain relations are 0/1 valued.
struct Relation {
  std::uint32_t size = 0;
  std::vector<std::uint64_t> mult;

  explicit Relation(std::uint32_t n = 0) : size(n), mult(std::uint64_t{n} * n, 0) {}

  std::uint64_t& at(std::uint32_t from, std::uint32_t to) { return mult[from * size + to]; }
  std::uint64_t at(std::uint32_t from, std::uint32_t to) const { return mult[from * size + to]; }

  // Sum of all multiplicities.
  std::uint64_t total() const;

  bool operator==(const Relation&) const = default;
};

Relation identity_relation(std::uint32_t size);

// Same line, different point.
Relation point_relation(const FlagVariety& x);
// Same point, different line.
Relation line_relation(const FlagVariety& x);

// Path counting: the multiplicity of (a, c) is the sum over b of
// first(a, b) * second(b, c). Sizes must match.
Relation compose_relations(const Relation& second, const Relation& first);

Relation add_relations(const Relation& a, const Relation& b);
Relation scale_relation(std::uint64_t k, const Relation& r);

// A three-step walk through the flag variety recorded as the four flags
// visited. Point and line steps alternate; which one leads is up to the
// producer.
struct BraidPath {
  std::array<std::uint32_t, 4> flags;

  auto operator<=>(const BraidPath&) const = default;
};

// All walks point-line-point, respectively line-point-line, each step
// changing the named part and nothing else.
std::vector<BraidPath> plp_paths(const FlagVariety& x);
std::vector<BraidPath> lpl_paths(const FlagVariety& x);

// The geometric correspondent of a point-line-point walk: keep the
// endpoints, route the middle through the line joining the outer points.
// Valid on every walk that a plp enumeration can produce, because the outer
// points of such a walk are never equal.
BraidPath braid_partner(const FlagVariety& x, const BraidPath& plp);

// Outcome of checking the incidence identities on one flag variety: both
// quadratic identities fiberwise, equality of the two braid composites
// fiberwise, the endpoint-preserving bijection between the two walk
// families, and its equivariance under a few invertible matrices.
struct GeometricReport {
  std::uint32_t q = 0;
  std::uint32_t flags = 0;
  std::uint64_t point_pairs = 0;
  std::uint64_t line_pairs = 0;
  bool quadratic_point = false;
  bool quadratic_line = false;
  bool braid_fibers = false;
  bool braid_bijection = false;
  bool equivariant = false;
  std::vector<std::string> notes;

  bool ok() const {
    return quadratic_point && quadratic_line && braid_fibers && braid_bijection && equivariant;
  }
};

GeometricReport verify_geometric_relations(std::uint32_t q);

}  // namespace gpd::hecke
