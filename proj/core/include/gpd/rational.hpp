#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gpd {

// Exact rational number, always stored reduced with positive denominator.
// Thin wrapper over GMP's mpq_class; exists to pin down the serialized form
// "p/q" (q > 0, gcd(p,q) = 1) and to keep GMP types out of public signatures.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational from_uint64(std::uint64_t n);
  // Accepts "p/q" or a bare integer "p"; throws std::invalid_argument on junk
  // or zero denominator.
  static Rational parse(const std::string& s);

  // Canonical "p/q" form, denominator always explicit: "3/1", "-8/3", "0/1".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& raw() const { return v_; }

  // 1/n for n > 0, the workhorse of cardinality sums.
  static Rational unit_fraction(std::uint64_t n);

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gpd
