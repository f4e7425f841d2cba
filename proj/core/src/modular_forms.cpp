#include "qsign/modular_forms.hpp"

#include <limits>
#include <utility>

#include "qsign/errors.hpp"

namespace qsign {

namespace {

Enclosure eps_for(long prec) { return pow_si(Enclosure(2, prec), -(prec + 8)); }

ComplexHP scale(const ComplexHP& z, const Rational& r) {
  return z * Enclosure::from_rational(r, z.precision());
}

// 2 pi i z
ComplexHP two_pi_i(const ComplexHP& z) {
  const long p = z.precision();
  return ComplexHP(Enclosure(0, p), Enclosure(2, p) * Enclosure::pi(p)) * z;
}

// pi i z
ComplexHP pi_i(const ComplexHP& z) {
  const long p = z.precision();
  return ComplexHP(Enclosure(0, p), Enclosure::pi(p)) * z;
}

void require_upper_half(const ComplexHP& tau) {
  if (!tau.im().positive()) throw domain_error("tau must have certified positive imaginary part");
}

bool small_nome(const ComplexHP& tau) {
  // |q| = e^{-2 pi Im tau} <= 1/2  <=>  Im tau >= log 2 / (2 pi) ~ 0.1103
  return mpfr_cmp_d(tau.im().lo(), 0.1104) >= 0;
}

// Midpoint-radius form for long products: multiplying rectangles directly overestimates
// by a constant factor per step once the factors rotate.
struct Ball {
  ComplexHP c;
  Enclosure r;

  explicit Ball(const ComplexHP& z) : c(z.center()), r(z.radius()) {}
  Ball(ComplexHP center, Enclosure rad) : c(std::move(center)), r(std::move(rad)) {}

  Ball& operator*=(const Ball& o) {
    const ComplexHP prod = c * o.c;
    Enclosure rad = prod.radius() + c.abs().mag() * o.r + o.c.abs().mag() * r + r * o.r;
    c = prod.center();
    r = rad.mag();
    return *this;
  }
  ComplexHP enclosure() const { return c.inflate(r); }
};

ComplexHP eta_product(const ComplexHP& tau) {
  const ComplexHP q = nome(tau);
  return exp(scale(pi_i(tau), Rational(1, 12))) * pochhammer(q, q);
}

ComplexHP eta_series(const ComplexHP& tau) {
  const long p = tau.precision();
  const Enclosure one(1, p);
  const Enclosure qabs = exp(-Enclosure(2, p) * Enclosure::pi(p) * tau.im());
  const Enclosure eps = eps_for(p);
  ComplexHP sum = ComplexHP::one(p);
  for (long k = 1;; ++k) {
    const long e_minus = k * (3 * k - 1) / 2;
    const long e_plus = k * (3 * k + 1) / 2;
    const ComplexHP t = exp(two_pi_i(tau) * Enclosure(e_minus, p)) + exp(two_pi_i(tau) * Enclosure(e_plus, p));
    if (k % 2 == 0) {
      sum += t;
    } else {
      sum -= t;
    }
    // Remaining exponents start at (k+1)(3k+2)/2 and increase by at least 1 each.
    const long next = (k + 1) * (3 * k + 2) / 2;
    const Enclosure tail = Enclosure(2, p) * pow_si(qabs, next) / (one - qabs);
    if (tail.certainly_less(eps * sum.abs().mag()) || tail.certainly_less(eps * eps)) {
      return exp(scale(pi_i(tau), Rational(1, 12))) * sum.inflate(tail);
    }
    if (k > 2000000) throw domain_error("eta series did not converge");
  }
}

ComplexHP theta_series(const ComplexHP& sigma, const ComplexHP& tau) {
  const long p = tau.precision();
  const Enclosure one(1, p);
  const Enclosure pi = Enclosure::pi(p);
  const Enclosure y = tau.im();
  const Enclosure s_im = sigma.im().mag();
  const Enclosure eps = eps_for(p);
  const ComplexHP shifted = sigma + ComplexHP::from_rationals(Rational(1, 2), Rational(0), p);
  const Enclosure rho = exp(-pi * y);
  const Enclosure v0 = Enclosure(2, p) * s_im / y + one;
  ComplexHP sum(p);
  for (long j = 0;; ++j) {
    for (int sgn : {1, -1}) {
      const Rational nu = Rational(sgn) * Rational(2 * j + 1, 2);
      const Enclosure nu_e = Enclosure::from_rational(nu, p);
      sum += exp(scale(pi_i(tau), nu * nu) + two_pi_i(shifted) * nu_e);
    }
    // Bound for all |nu| >= j + 3/2: ratio of consecutive magnitudes is at most e^{-pi y}.
    const Enclosure nu_next = Enclosure::from_rational(Rational(2 * j + 3, 2), p);
    if (v0.certainly_less(nu_next)) {
      const Enclosure g = exp(-pi * square(nu_next) * y + Enclosure(2, p) * pi * nu_next * s_im);
      const Enclosure tail = Enclosure(2, p) * g / (one - rho);
      if (tail.certainly_less(eps * sum.abs().mag()) || tail.certainly_less(eps * eps)) {
        return sum.inflate(tail);
      }
    }
    if (j > 2000000) throw domain_error("theta series did not converge");
  }
}

ComplexHP theta_product(const ComplexHP& sigma, const ComplexHP& tau) {
  const long p = tau.precision();
  const ComplexHP q = nome(tau);
  const ComplexHP xi = exp(two_pi_i(sigma));
  const ComplexHP pre = -ComplexHP::i(p) * exp(scale(pi_i(tau), Rational(1, 4))) * exp(-pi_i(sigma));
  return pre * pochhammer(q, q) * pochhammer(xi, q) * pochhammer(q / xi, q);
}

}  // namespace

ComplexHP nome(const ComplexHP& tau) { return exp(two_pi_i(tau)); }

ComplexHP pochhammer(const ComplexHP& x, const ComplexHP& q) {
  const long p = std::max(x.precision(), q.precision());
  const Enclosure one(1, p);
  const Enclosure qabs = q.abs();
  if (!qabs.certainly_less(one)) throw domain_error("pochhammer needs |q| < 1");
  const Enclosure xabs = x.abs();
  const Enclosure eps = eps_for(p);
  const Enclosure half = Enclosure::from_rational(Rational(1, 2), p);
  Ball prod(ComplexHP::one(p), Enclosure(0, p));
  Ball term(x);
  const Ball qb(q);
  Enclosure bound = xabs;  // |x| |q|^k
  for (long k = 0;; ++k) {
    const Enclosure s = bound / (one - qabs);
    if (s.certainly_less(half) && s.certainly_less(eps)) {
      // |e^s - 1| <= 2 s for s <= 1/2
      const ComplexHP out = prod.enclosure();
      return out.inflate(out.abs().mag() * Enclosure(2, p) * s);
    }
    Ball factor(ComplexHP::one(p) - term.c);
    factor.r = (factor.r + term.r).mag();
    prod *= factor;
    term *= qb;
    bound *= qabs;
    if (k > 5000000) throw domain_error("pochhammer product did not converge");
  }
}

ComplexHP eta(const ComplexHP& tau, Route route) {
  require_upper_half(tau);
  if (route == Route::Product || (route == Route::Auto && small_nome(tau))) return eta_product(tau);
  return eta_series(tau);
}

ComplexHP theta(const ComplexHP& sigma, const ComplexHP& tau, Route route) {
  require_upper_half(tau);
  if (route == Route::Product || (route == Route::Auto && small_nome(tau))) return theta_product(sigma, tau);
  return theta_series(sigma, tau);
}

ComplexHP psi(const ComplexHP& sigma, const ComplexHP& tau, Route route) {
  require_upper_half(tau);
  if (route == Route::Product || (route == Route::Auto && small_nome(tau))) {
    const ComplexHP q = nome(tau);
    const ComplexHP xi = exp(two_pi_i(sigma));
    return pochhammer(xi, q) * pochhammer(q / xi, q);
  }
  const long p = tau.precision();
  const ComplexHP pre = ComplexHP::i(p) * exp(scale(pi_i(tau), Rational(-1, 6))) * exp(pi_i(sigma));
  return pre * theta(sigma, tau, Route::Series) / eta(tau, Route::Series);
}

ComplexHP automorphy(const GammaMatrix& g, const ComplexHP& tau) {
  const long p = tau.precision();
  return tau * Enclosure(g.c, p) + ComplexHP(Enclosure(g.d, p), Enclosure(0, p));
}

ComplexHP mobius(const GammaMatrix& g, const ComplexHP& tau) {
  const long p = tau.precision();
  const ComplexHP num = tau * Enclosure(g.a, p) + ComplexHP(Enclosure(g.b, p), Enclosure(0, p));
  return num / automorphy(g, tau);
}

ComplexHP multiplier(const GammaMatrix& g, long prec) {
  return ComplexHP::unit(eta_multiplier(g).turns_of_pi(), prec);
}

double relative_residual(const ComplexHP& lhs, const ComplexHP& rhs) {
  const Enclosure den = rhs.abs();
  if (!den.positive()) return std::numeric_limits<double>::infinity();
  return ((lhs - rhs).abs().mag() / den.mig()).hi_double();
}

double eta_transform_residual(const GammaMatrix& g, const ComplexHP& tau) {
  const long p = tau.precision();
  const ComplexHP lhs = eta(mobius(g, tau));
  const ComplexHP rhs = multiplier(g, p) * sqrt_principal(automorphy(g, tau)) * eta(tau);
  return relative_residual(lhs, rhs);
}

double theta_transform_residual(const GammaMatrix& g, const ComplexHP& sigma, const ComplexHP& tau) {
  const long p = tau.precision();
  const ComplexHP j = automorphy(g, tau);
  const ComplexHP lhs = theta(sigma / j, mobius(g, tau));
  const ComplexHP chi3 = ComplexHP::unit(eta_multiplier(g).pow(3).turns_of_pi(), p);
  const ComplexHP gauss = exp(pi_i(sigma * sigma * Enclosure(g.c, p) / j));
  const ComplexHP rhs = chi3 * sqrt_principal(j) * gauss * theta(sigma, tau);
  return relative_residual(lhs, rhs);
}

double quasi_periodicity_residual(long A, long B, const ComplexHP& sigma, const ComplexHP& tau) {
  const long p = tau.precision();
  const ComplexHP shifted = sigma + tau * Enclosure(A, p) + ComplexHP(Enclosure(B, p), Enclosure(0, p));
  const ComplexHP lhs = theta(shifted, tau);
  const Rational sign_turns((A + B) % 2 == 0 ? 0 : 1);
  const ComplexHP factor = ComplexHP::unit(sign_turns, p) * exp(-pi_i(tau) * Enclosure(A * A, p)) *
                           exp(-two_pi_i(sigma) * Enclosure(A, p));
  return relative_residual(lhs, factor * theta(sigma, tau));
}

double psi_routes_residual(const ComplexHP& sigma, const ComplexHP& tau) {
  return relative_residual(psi(sigma, tau, Route::Product), psi(sigma, tau, Route::Series));
}

}  // namespace qsign
