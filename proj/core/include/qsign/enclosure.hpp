#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "qsign/rational.hpp"

namespace qsign {

inline constexpr long default_precision_bits = 192;
inline constexpr long max_precision_bits = 1024;

/// Closed interval [lo, hi] of MPFR reals. Every operation rounds lo down and hi up,
/// so the exact result of the corresponding real operation is always contained.
class Enclosure {
 public:
  explicit Enclosure(long prec = default_precision_bits);
  Enclosure(long value, long prec);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(const Enclosure& other);
  Enclosure& operator=(Enclosure&& other) noexcept;
  ~Enclosure();

  static Enclosure from_rational(const Rational& value, long prec);
  static Enclosure from_mpz(const mpz_class& value, long prec);
  /// Exact double, widened only if prec is smaller than 53 bits.
  static Enclosure from_double(double value, long prec);
  /// [a, b] from two doubles; requires a <= b.
  static Enclosure hull_of(double a, double b, long prec);
  static Enclosure pi(long prec);

  long precision() const noexcept { return prec_; }
  mpfr_srcptr lo() const noexcept { return lo_; }
  mpfr_srcptr hi() const noexcept { return hi_; }

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;
  /// Scientific-notation endpoints with `digits` significant digits, rounded outward.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  std::string to_string(int digits = 20) const;

  bool contains(double x) const;
  bool contains(const Enclosure& other) const;
  bool intersects(const Enclosure& other) const;
  bool positive() const;  // lo > 0
  bool negative() const;  // hi < 0
  bool is_finite() const;
  /// hi < other.lo
  bool certainly_less(const Enclosure& other) const;

  /// Upper bound on hi - lo, as a point enclosure.
  Enclosure width() const;
  /// Upper bound on max(|lo|, |hi|).
  Enclosure mag() const;
  /// Lower bound on min |x| over the interval (0 if it straddles zero).
  Enclosure mig() const;
  Enclosure hull(const Enclosure& other) const;
  /// Point enclosure at the rounded midpoint, and an upper bound on the distance to either endpoint.
  Enclosure midpoint() const;
  Enclosure radius() const;
  /// Adds [-r.hi, r.hi].
  Enclosure inflate(const Enclosure& r) const;
  /// Same interval rounded outward to `prec` bits.
  Enclosure with_precision(long prec) const;

  Enclosure operator-() const;
  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);
  Enclosure& operator/=(const Enclosure& o);

  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }

  friend Enclosure sqrt(const Enclosure& x);
  friend Enclosure exp(const Enclosure& x);
  friend Enclosure log(const Enclosure& x);
  friend Enclosure cos(const Enclosure& x);
  friend Enclosure sin(const Enclosure& x);
  friend Enclosure abs(const Enclosure& x);
  friend Enclosure square(const Enclosure& x);
  friend Enclosure max(const Enclosure& a, const Enclosure& b);

 private:
  long prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// x^e for x > 0, via exp(e log x).
Enclosure pow(const Enclosure& x, const Rational& e);
Enclosure pow_si(const Enclosure& x, long e);
/// cos(pi t) and sin(pi t) for exact rational t.
Enclosure cos_pi(const Rational& t, long prec);
Enclosure sin_pi(const Rational& t, long prec);

}  // namespace qsign
