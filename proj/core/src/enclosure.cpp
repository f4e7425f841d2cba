#include "qsign/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qsign/errors.hpp"

namespace qsign {

namespace {

// Scratch MPFR value with RAII cleanup.
struct Tmp {
  mpfr_t v;
  explicit Tmp(long prec) { mpfr_init2(v, prec); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
};

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*e", std::max(digits - 1, 0), rnd, x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

long joint_prec(const Enclosure& a, const Enclosure& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Enclosure::Enclosure(long prec) : prec_(prec) {
  if (prec < MPFR_PREC_MIN || prec > 1L << 20) throw usage_error("precision out of range: " + std::to_string(prec));
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(long value, long prec) : Enclosure(prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& other) {
  if (this == &other) return *this;
  prec_ = other.prec_;
  mpfr_set_prec(lo_, prec_);
  mpfr_set_prec(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::from_rational(const Rational& value, long prec) {
  Enclosure e(prec);
  mpfr_set_q(e.lo_, value.value().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(e.hi_, value.value().get_mpq_t(), MPFR_RNDU);
  return e;
}

Enclosure Enclosure::from_mpz(const mpz_class& value, long prec) {
  Enclosure e(prec);
  mpfr_set_z(e.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(e.hi_, value.get_mpz_t(), MPFR_RNDU);
  return e;
}

Enclosure Enclosure::from_double(double value, long prec) { return hull_of(value, value, prec); }

Enclosure Enclosure::hull_of(double a, double b, long prec) {
  if (!(a <= b)) throw usage_error("hull_of needs a <= b");
  Enclosure e(prec);
  mpfr_set_d(e.lo_, a, MPFR_RNDD);
  mpfr_set_d(e.hi_, b, MPFR_RNDU);
  return e;
}

Enclosure Enclosure::pi(long prec) {
  Enclosure e(prec);
  mpfr_const_pi(e.lo_, MPFR_RNDD);
  mpfr_const_pi(e.hi_, MPFR_RNDU);
  return e;
}

double Enclosure::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Enclosure::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

std::string Enclosure::lo_string(int digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string Enclosure::hi_string(int digits) const { return format(hi_, digits, MPFR_RNDU); }
std::string Enclosure::to_string(int digits) const { return "[" + lo_string(digits) + ", " + hi_string(digits) + "]"; }

bool Enclosure::contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }
bool Enclosure::contains(const Enclosure& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}
bool Enclosure::intersects(const Enclosure& o) const {
  return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
}
bool Enclosure::positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::negative() const { return mpfr_sgn(hi_) < 0; }
bool Enclosure::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
bool Enclosure::certainly_less(const Enclosure& o) const { return mpfr_less_p(hi_, o.lo_); }

Enclosure Enclosure::width() const {
  Enclosure w(prec_);
  mpfr_sub(w.hi_, hi_, lo_, MPFR_RNDU);
  mpfr_set(w.lo_, w.hi_, MPFR_RNDD);
  return w;
}

Enclosure Enclosure::mag() const {
  Enclosure m(prec_);
  if (mpfr_cmpabs(lo_, hi_) > 0) {
    mpfr_abs(m.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_abs(m.hi_, hi_, MPFR_RNDU);
  }
  mpfr_set(m.lo_, m.hi_, MPFR_RNDD);
  return m;
}

Enclosure Enclosure::mig() const {
  Enclosure m(prec_);
  if (positive()) {
    mpfr_set(m.lo_, lo_, MPFR_RNDD);
  } else if (negative()) {
    mpfr_neg(m.lo_, hi_, MPFR_RNDD);
  }
  mpfr_set(m.hi_, m.lo_, MPFR_RNDU);
  return m;
}

Enclosure Enclosure::hull(const Enclosure& o) const {
  Enclosure h(joint_prec(*this, o));
  mpfr_min(h.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_max(h.hi_, hi_, o.hi_, MPFR_RNDU);
  return h;
}

Enclosure Enclosure::midpoint() const {
  Enclosure m(prec_);
  mpfr_add(m.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.lo_, m.lo_, 1, MPFR_RNDN);
  mpfr_set(m.hi_, m.lo_, MPFR_RNDN);
  return m;
}

Enclosure Enclosure::radius() const {
  const Enclosure m = midpoint();
  Enclosure r(prec_);
  Tmp t(prec_);
  mpfr_sub(r.hi_, m.lo_, lo_, MPFR_RNDU);
  mpfr_sub(t.v, hi_, m.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

Enclosure Enclosure::inflate(const Enclosure& r) const {
  Enclosure out(joint_prec(*this, r));
  Tmp rr(out.prec_);
  mpfr_abs(rr.v, r.hi_, MPFR_RNDU);
  if (mpfr_cmpabs(r.lo_, rr.v) > 0) mpfr_abs(rr.v, r.lo_, MPFR_RNDU);
  mpfr_sub(out.lo_, lo_, rr.v, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, rr.v, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::with_precision(long prec) const {
  Enclosure out(prec);
  mpfr_set(out.lo_, lo_, MPFR_RNDD);
  mpfr_set(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::operator-() const {
  Enclosure out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
  Enclosure out(joint_prec(*this, o));
  mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
  return *this = std::move(out);
}

Enclosure& Enclosure::operator-=(const Enclosure& o) {
  Enclosure out(joint_prec(*this, o));
  mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
  return *this = std::move(out);
}

Enclosure& Enclosure::operator*=(const Enclosure& o) {
  Enclosure out(joint_prec(*this, o));
  Tmp t(out.prec_);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {o.lo_, o.hi_};
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, -1);
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      mpfr_min(out.lo_, out.lo_, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      mpfr_max(out.hi_, out.hi_, t.v, MPFR_RNDU);
    }
  }
  return *this = std::move(out);
}

Enclosure& Enclosure::operator/=(const Enclosure& o) {
  if (!o.positive() && !o.negative()) throw domain_error("division by an enclosure containing zero");
  Enclosure inv(o.prec_);
  mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
  return *this *= inv;
}

Enclosure sqrt(const Enclosure& x) {
  if (x.negative()) throw domain_error("sqrt of a negative enclosure");
  Enclosure out(x.prec_);
  if (mpfr_sgn(x.lo_) <= 0) {
    mpfr_set_zero(out.lo_, 1);
  } else {
    mpfr_sqrt(out.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Enclosure exp(const Enclosure& x) {
  Enclosure out(x.prec_);
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Enclosure log(const Enclosure& x) {
  if (!x.positive()) throw domain_error("log of an enclosure not bounded away from zero");
  Enclosure out(x.prec_);
  mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

namespace {

using TrigFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// f(mid) +- radius for a 1-Lipschitz f with range [-1, 1].
void lipschitz_trig(mpfr_ptr out_lo, mpfr_ptr out_hi, mpfr_srcptr lo, mpfr_srcptr hi, long prec, TrigFn fn) {
  Tmp mid(prec), rad(prec), t(prec);
  mpfr_add(mid.v, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(mid.v, mid.v, 1, MPFR_RNDN);
  mpfr_sub(rad.v, mid.v, lo, MPFR_RNDU);
  mpfr_sub(t.v, hi, mid.v, MPFR_RNDU);
  mpfr_max(rad.v, rad.v, t.v, MPFR_RNDU);
  fn(out_lo, mid.v, MPFR_RNDD);
  fn(out_hi, mid.v, MPFR_RNDU);
  mpfr_sub(out_lo, out_lo, rad.v, MPFR_RNDD);
  mpfr_add(out_hi, out_hi, rad.v, MPFR_RNDU);
  if (mpfr_cmp_si(out_lo, -1) < 0) mpfr_set_si(out_lo, -1, MPFR_RNDD);
  if (mpfr_cmp_si(out_hi, 1) > 0) mpfr_set_si(out_hi, 1, MPFR_RNDU);
}

}  // namespace

Enclosure cos(const Enclosure& x) {
  Enclosure out(x.prec_);
  lipschitz_trig(out.lo_, out.hi_, x.lo_, x.hi_, x.prec_, mpfr_cos);
  return out;
}

Enclosure sin(const Enclosure& x) {
  Enclosure out(x.prec_);
  lipschitz_trig(out.lo_, out.hi_, x.lo_, x.hi_, x.prec_, mpfr_sin);
  return out;
}

Enclosure abs(const Enclosure& x) {
  if (x.positive()) return x;
  if (x.negative()) return -x;
  Enclosure out = x.mag();
  mpfr_set_zero(out.lo_, 1);
  return out;
}

Enclosure square(const Enclosure& x) {
  const Enclosure a = abs(x);
  return a * a;
}

Enclosure max(const Enclosure& a, const Enclosure& b) {
  Enclosure out(joint_prec(a, b));
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Enclosure pow(const Enclosure& x, const Rational& e) {
  if (e.sign() == 0) return Enclosure(1, x.precision());
  return exp(log(x) * Enclosure::from_rational(e, x.precision()));
}

Enclosure pow_si(const Enclosure& x, long e) {
  Enclosure base = e < 0 ? Enclosure(1, x.precision()) / x : x;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Enclosure acc(1, x.precision());
  while (n != 0) {
    if (n & 1UL) acc *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return acc;
}

Enclosure cos_pi(const Rational& t, long prec) {
  const Rational r = t.mod(Rational(2));
  if (r == Rational(0)) return Enclosure(1, prec);
  if (r == Rational(1)) return Enclosure(-1, prec);
  if (r == Rational(1, 2) || r == Rational(3, 2)) return Enclosure(0, prec);
  return cos(Enclosure::pi(prec) * Enclosure::from_rational(r, prec));
}

Enclosure sin_pi(const Rational& t, long prec) { return cos_pi(Rational(1, 2) - t, prec); }

}  // namespace qsign
