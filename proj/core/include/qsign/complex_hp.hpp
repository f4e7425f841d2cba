#pragma once

#include <algorithm>
#include <complex>
#include <utility>

#include "qsign/enclosure.hpp"
#include "qsign/rational.hpp"

namespace qsign {

/// Rectangular complex enclosure: the exact value lies in re x im.
class ComplexHP {
 public:
  explicit ComplexHP(long prec = default_precision_bits) : re_(prec), im_(prec) {}
  ComplexHP(Enclosure re, Enclosure im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexHP from_rationals(const Rational& re, const Rational& im, long prec);
  static ComplexHP from_complex(std::complex<double> z, long prec);
  static ComplexHP i(long prec);
  static ComplexHP one(long prec);
  /// e^{pi i t} for exact rational t.
  static ComplexHP unit(const Rational& t, long prec);

  const Enclosure& re() const noexcept { return re_; }
  const Enclosure& im() const noexcept { return im_; }
  long precision() const { return std::max(re_.precision(), im_.precision()); }
  std::complex<double> mid() const { return {re_.mid_double(), im_.mid_double()}; }

  ComplexHP operator-() const { return {-re_, -im_}; }
  ComplexHP& operator+=(const ComplexHP& o);
  ComplexHP& operator-=(const ComplexHP& o);
  ComplexHP& operator*=(const ComplexHP& o);
  ComplexHP& operator/=(const ComplexHP& o);
  ComplexHP& operator*=(const Enclosure& o);

  friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
  friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
  friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
  friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }
  friend ComplexHP operator*(ComplexHP a, const Enclosure& b) { return a *= b; }

  ComplexHP conj() const { return {re_, -im_}; }
  /// |z|^2 and |z| enclosures.
  Enclosure norm() const;
  Enclosure abs() const;
  /// Point center and an upper bound on the distance from it to any point of the rectangle.
  ComplexHP center() const { return {re_.midpoint(), im_.midpoint()}; }
  Enclosure radius() const { return sqrt(square(re_.radius()) + square(im_.radius())).mag(); }
  /// Adds the square [-r, r] x [-r, r].
  ComplexHP inflate(const Enclosure& r) const { return {re_.inflate(r), im_.inflate(r)}; }
  ComplexHP with_precision(long prec) const { return {re_.with_precision(prec), im_.with_precision(prec)}; }

 private:
  Enclosure re_;
  Enclosure im_;
};

ComplexHP exp(const ComplexHP& z);
/// Principal square root; requires Im z > 0 or Re z > 0 (certified).
ComplexHP sqrt_principal(const ComplexHP& z);
ComplexHP pow_si(const ComplexHP& z, long e);

}  // namespace qsign
