#include "qsign/bessel.hpp"

namespace qsign {

Enclosure bessel_Im1(const Enclosure& x, long prec, BesselStats* stats) {
  if (mpfr_sgn(x.lo()) < 0) throw usage_error("bessel_Im1 needs x >= 0");
  if (mpfr_sgn(x.hi()) == 0) {
    if (stats) *stats = {0, true};
    return Enclosure(0, prec);
  }
  const long wp = prec + 32;
  const Enclosure xh = x.with_precision(wp);
  const Enclosure y = xh * Enclosure::from_rational(Rational(1, 2), wp);
  const Enclosure y2 = square(y);

  // term_1 = y, term_{m+1} = term_m * y^2 / (m (m+1)).
  Enclosure term = y;
  Enclosure sum = term;
  const Enclosure y2_hi = y2.mag();
  Enclosure eps = pow_si(Enclosure(2, wp), -(prec + 8));
  std::size_t m = 1;
  for (;; ++m) {
    Enclosure next = term * y2 / Enclosure(static_cast<long>(m * (m + 1)), wp);
    // Ratio bound for every later term: y^2 / ((m+1)(m+2)).
    const Enclosure rho = y2_hi / Enclosure(static_cast<long>((m + 1) * (m + 2)), wp);
    const bool geometric = rho.certainly_less(Enclosure::from_rational(Rational(1, 2), wp));
    if (geometric) {
      const Enclosure tail = next.mag() * Enclosure(2, wp);
      if (tail.certainly_less(sum.mag() * eps)) {
        if (stats) *stats = {m, true};
        Enclosure out = sum + Enclosure(0, wp).hull(tail);
        return out.with_precision(prec);
      }
    }
    sum += next;
    term = std::move(next);
    if (m > 1000000) throw domain_error("bessel_Im1: series did not converge");
  }
}

Enclosure wang_lower(const Enclosure& x) {
  return exp(x) / (sqrt(x) * Enclosure(10, x.precision()));
}

Enclosure wang_upper(const Enclosure& x) {
  const long p = x.precision();
  return sqrt(Enclosure::pi(p) / Enclosure(8, p)) * exp(x) / sqrt(x);
}

Verdict wang_bounds_hold(const Enclosure& x) {
  if (mpfr_cmp_si(x.lo(), 3) < 0) throw usage_error("wang_bounds_hold needs x >= 3");
  const Enclosure i1 = bessel_Im1(x, x.precision());
  const Enclosure lo = wang_lower(x);
  const Enclosure hi = wang_upper(x);
  if (lo.certainly_less(i1) && i1.certainly_less(hi)) return Verdict::True;
  if (i1.certainly_less(lo) || hi.certainly_less(i1)) return Verdict::False;
  return Verdict::Unknown;
}

}  // namespace qsign
