#include "orbitstar/rational.hpp"

#include <stdexcept>

namespace orbitstar {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    mpz_class n(s.substr(0, slash), 10);
    mpz_class d(s.substr(slash + 1), 10);
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(n, d);
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::json_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
  return h ^ (std::hash<std::string>{}(q_.get_den().get_str(16)) * 1000003u);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

Rational factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(z);
}

}  // namespace orbitstar
