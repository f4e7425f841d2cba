#include "qsign/complex_hp.hpp"

#include "qsign/errors.hpp"

namespace qsign {

ComplexHP ComplexHP::from_rationals(const Rational& re, const Rational& im, long prec) {
  return {Enclosure::from_rational(re, prec), Enclosure::from_rational(im, prec)};
}

ComplexHP ComplexHP::from_complex(std::complex<double> z, long prec) {
  return {Enclosure::from_double(z.real(), prec), Enclosure::from_double(z.imag(), prec)};
}

ComplexHP ComplexHP::i(long prec) { return {Enclosure(0, prec), Enclosure(1, prec)}; }
ComplexHP ComplexHP::one(long prec) { return {Enclosure(1, prec), Enclosure(0, prec)}; }

ComplexHP ComplexHP::unit(const Rational& t, long prec) { return {cos_pi(t, prec), sin_pi(t, prec)}; }

ComplexHP& ComplexHP::operator+=(const ComplexHP& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexHP& ComplexHP::operator-=(const ComplexHP& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const ComplexHP& o) {
  Enclosure re = re_ * o.re_ - im_ * o.im_;
  Enclosure im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexHP& ComplexHP::operator/=(const ComplexHP& o) {
  const Enclosure d = o.norm();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const Enclosure& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Enclosure ComplexHP::norm() const { return square(re_) + square(im_); }
Enclosure ComplexHP::abs() const { return sqrt(norm()); }

ComplexHP exp(const ComplexHP& z) {
  const Enclosure r = exp(z.re());
  return {r * cos(z.im()), r * sin(z.im())};
}

ComplexHP sqrt_principal(const ComplexHP& z) {
  const long prec = z.precision();
  const Enclosure two(2, prec);
  if (z.re().positive()) {
    // a = sqrt((|z| + Re z)/2) > 0, b = Im z / (2a)
    const Enclosure a = sqrt((z.abs() + z.re()) / two);
    return {a, z.im() / (two * a)};
  }
  if (z.im().positive()) {
    // b = sqrt((|z| - Re z)/2) > 0, a = Im z / (2b)
    const Enclosure b = sqrt((z.abs() - z.re()) / two);
    return {z.im() / (two * b), b};
  }
  throw domain_error("sqrt_principal: argument not certified in the open upper or right half plane");
}

ComplexHP pow_si(const ComplexHP& z, long e) {
  const long prec = z.precision();
  ComplexHP base = e < 0 ? ComplexHP::one(prec) / z : z;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  ComplexHP acc = ComplexHP::one(prec);
  while (n != 0) {
    if (n & 1UL) acc *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return acc;
}

}  // namespace qsign
