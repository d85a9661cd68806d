#include "gpd/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gpd {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_uint64(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(n), 0, 0, &n);
  return Rational(mpq_class(z));
}

Rational Rational::unit_fraction(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("unit_fraction: n must be positive");
  Rational r = from_uint64(n);
  return Rational(1) / r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class p(s, 10);
      return Rational(mpq_class(p));
    }
    mpz_class p(s.substr(0, slash), 10);
    mpz_class q(s.substr(slash + 1), 10);
    if (q == 0) throw std::invalid_argument("rational: zero denominator");
    mpq_class r(p, q);
    r.canonicalize();
    return Rational(r);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gpd
