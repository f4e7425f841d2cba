#include "qsign/rational.hpp"

#include "qsign/errors.hpp"

namespace qsign {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.q_) == 0) throw domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::mod(const Rational& period) const {
  if (period.sign() <= 0) throw domain_error("Rational::mod: period must be positive");
  const Rational k = *this / period;
  return *this - period * Rational(k.floor());
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace qsign
