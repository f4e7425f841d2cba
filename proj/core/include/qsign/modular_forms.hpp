#pragma once

#include "qsign/complex_hp.hpp"
#include "qsign/modular.hpp"

namespace qsign {

/// Evaluation route. Auto picks the product when |q| <= 1/2 and the series otherwise.
enum class Route { Auto, Product, Series };

/// (x; q)_inf with a certified tail: |prod_{j>=K} (1 - x q^j) - 1| <= e^s - 1, s = |x||q|^K/(1-|q|).
ComplexHP pochhammer(const ComplexHP& x, const ComplexHP& q);

/// q = e^{2 pi i tau}
ComplexHP nome(const ComplexHP& tau);

/// eta(tau) = q^{1/24} (q;q)_inf; the series route uses the pentagonal expansion.
ComplexHP eta(const ComplexHP& tau, Route route = Route::Auto);

/// theta(s; tau) = sum_{nu in Z+1/2} e^{2 pi i nu (s + 1/2) + pi i nu^2 tau};
/// the product route is -i q^{1/8} xi^{-1/2} (q, xi, q/xi; q)_inf.
ComplexHP theta(const ComplexHP& sigma, const ComplexHP& tau, Route route = Route::Auto);

/// psi(s; tau) = (xi, q/xi; q)_inf. The series route is i e^{-pi i tau/6} e^{pi i s} theta(s;tau)/eta(tau).
ComplexHP psi(const ComplexHP& sigma, const ComplexHP& tau, Route route = Route::Auto);

/// gamma(tau) = (a tau + b)/(c tau + d)
ComplexHP mobius(const GammaMatrix& g, const ComplexHP& tau);
/// c tau + d
ComplexHP automorphy(const GammaMatrix& g, const ComplexHP& tau);
/// chi(gamma) as a complex enclosure.
ComplexHP multiplier(const GammaMatrix& g, long prec);

/// |lhs - rhs| / |rhs|, upper bound.
double relative_residual(const ComplexHP& lhs, const ComplexHP& rhs);

/// eta(gamma tau) against chi(gamma) (c tau + d)^{1/2} eta(tau).
double eta_transform_residual(const GammaMatrix& g, const ComplexHP& tau);
/// theta(s gamma*(tau); gamma tau) against chi(gamma)^3 (c tau + d)^{1/2} e^{pi i c s^2/(c tau + d)} theta(s; tau).
double theta_transform_residual(const GammaMatrix& g, const ComplexHP& sigma, const ComplexHP& tau);
/// theta(s + A tau + B; tau) against (-1)^{A+B} e^{-pi i A^2 tau} e^{-2 pi i A s} theta(s; tau).
double quasi_periodicity_residual(long A, long B, const ComplexHP& sigma, const ComplexHP& tau);
/// Direct product against the theta/eta route.
double psi_routes_residual(const ComplexHP& sigma, const ComplexHP& tau);

}  // namespace qsign
