#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsign/complex_hp.hpp"
#include "qsign/enclosure.hpp"
#include "qsign/farey.hpp"
#include "qsign/modular.hpp"
#include "qsign/product_spec.hpp"

namespace qsign {

/// Relative residual of the product transformation at tau = (h + i z)/k: the psi-product on the
/// left against prefactor * omega^2 * Upsilon * exp(pi/(12k)(Omega z + Delta/z)) * prod psi(s~_j; t~_j)^delta_j.
double check_product_transform(const ProductSpec& spec, long h, long k, const ComplexHP& z,
                               std::span<const long> hbar_override = {});

/// Relative residual between prod psi(s~_j; t~_j)^delta_j and the split
/// Pi_{h,k} * prod_{lambda*_j = 0} (xi_j q~_j, q~_j/xi_j; q~_j)^delta_j * prod_{lambda*_j > 0} psi(s~_j; t~_j)^delta_j.
double check_factorization(const ProductSpec& spec, long h, long k, const ComplexHP& z);

/// re + im_coeff * (i/z)
struct LinearForm {
  Rational re;
  Rational im_coeff;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// gamma_(m,h,k)(m tau) and r tau gamma*(m tau) + lambda gamma(m tau), evaluated by exact Mobius
/// algebra on linear polynomials in i z (independent of the closed forms in TransformData).
struct MobiusForms {
  LinearForm tau;
  LinearForm sigma;
};

MobiusForms mobius_forms(const PsiFactor& f, long h, long k, long hbar);

/// True when mobius_forms agrees with transform_data for every factor.
bool closed_forms_agree(const ProductSpec& spec, long h, long k);

/// Product value at q = e^{2 pi i tau} in double precision (diagnostic use).
std::complex<double> product_value(const ProductSpec& spec, std::complex<double> tau);

struct NumericCoefficient {
  Enclosure value;  // real part +- estimated quadrature error; not certified
  double imag = 0;
  double error_estimate = 0;
  long order = 0;
  long evaluations = 0;
};

/// Order giving a circle radius near the saddle point for coefficient n.
long default_farey_order(long n);

/// alpha(n) by quadrature over the Farey arcs of order N (Romberg, tolerance 1e-10 relative per arc).
NumericCoefficient numeric_coefficient(const ProductSpec& spec, long n, long N);

struct Lemma22Report {
  double a = 0, b = 0;
  long h = 0, k = 0, n = 0, N = 0;
  std::complex<double> integral;
  double main = 0;
  double error = 0;  // |integral - main|
  double bound = 0;
  double quadrature_error = 0;
  bool holds = false;  // error + quadrature_error <= bound
};

/// Evaluates the arc integral of e^{pi/(12k)(b z + a/z)} e^{-2 pi i n phi} e^{2 pi n rho} numerically and
/// compares it with (2 pi/k) ((24n+b)/a)^{-1/2} I_{-1}((pi/(6k)) sqrt(a(24n+b))) against the bound
/// e^{pi a/3} e^{2 pi rho (n + b/24)} / (pi (n + b/24)). Requires a > 0, n > b/24, (h,k) an arc of order N.
Lemma22Report lemma22_spotcheck(double a, double b, long h, long k, long n, long N);

struct IdentityReport {
  std::string identity;
  long samples = 0;
  double max_residual = 0;
  long precision_bits = 0;
  std::uint64_t seed = 0;
};

/// Identity names accepted by run_identity_check.
const std::vector<std::string>& identity_names();

/// Seeded random sampling of one identity: eta, theta, quasi, psi, product, factorization, mobius.
IdentityReport run_identity_check(const std::string& identity, long samples, std::uint64_t seed,
                                  long prec = default_precision_bits);

}  // namespace qsign
