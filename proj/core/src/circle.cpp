#include "qsign/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qsign/errors.hpp"
#include "qsign/modular_forms.hpp"

namespace qsign {

namespace {

ComplexHP linear_value(const Rational& re, const Rational& im_coeff, const ComplexHP& i_over_z) {
  const long p = i_over_z.precision();
  return ComplexHP::from_rationals(re, Rational(0), p) + i_over_z * Enclosure::from_rational(im_coeff, p);
}

ComplexHP psi_power(const ComplexHP& sigma, const ComplexHP& tau, long delta) {
  return pow_si(psi(sigma, tau), delta);
}

ComplexHP lhs_product(const ProductSpec& spec, long h, long k, const ComplexHP& z) {
  const long p = z.precision();
  // tau = (h + i z)/k
  const ComplexHP tau = (ComplexHP::from_rationals(Rational(h), Rational(0), p) + ComplexHP::i(p) * z) *
                        Enclosure::from_rational(Rational(1, k), p);
  ComplexHP out = ComplexHP::one(p);
  for (const auto& f : spec.factors()) {
    out *= psi_power(tau * Enclosure(f.r, p), tau * Enclosure(f.m, p), f.delta);
  }
  return out;
}

ComplexHP transformed_product(const TransformData& td, const ComplexHP& z) {
  const long p = z.precision();
  const ComplexHP i_over_z = ComplexHP::i(p) / z;
  ComplexHP out = ComplexHP::one(p);
  for (const auto& ft : td.factors) {
    out *= psi_power(linear_value(ft.sigma_re, ft.sigma_im, i_over_z), linear_value(ft.tau_re, ft.tau_im, i_over_z),
                     ft.factor.delta);
  }
  return out;
}

template <typename T>
using Cx = std::complex<T>;

// Romberg on [lo, hi]; returns the estimate and |R(i,i) - R(i-1,i-1)|.
template <typename T, typename F>
std::pair<Cx<T>, T> romberg(F&& f, T lo, T hi, T rel_tol, T abs_tol, long& evals) {
  constexpr int kMaxLevel = 24;
  std::vector<std::vector<Cx<T>>> R(kMaxLevel + 1);
  R[0].push_back((hi - lo) / T(2) * (f(lo) + f(hi)));
  evals += 2;
  T last_diff = std::numeric_limits<T>::infinity();
  for (int i = 1; i <= kMaxLevel; ++i) {
    const long n = 1L << (i - 1);
    const T h = (hi - lo) / T(2 * n);
    Cx<T> sum{0, 0};
    for (long j = 0; j < n; ++j) sum += f(lo + h * T(2 * j + 1));
    evals += n;
    R[i].push_back(R[i - 1][0] / T(2) + h * sum);
    T pow4 = 1;
    for (int j = 1; j <= i; ++j) {
      pow4 *= 4;
      R[i].push_back(R[i][j - 1] + (R[i][j - 1] - R[i - 1][j - 1]) / (pow4 - T(1)));
    }
    last_diff = std::abs(R[i][i] - R[i - 1][i - 1]);
    if (i >= 5 && (last_diff <= rel_tol * std::abs(R[i][i]) || last_diff <= abs_tol)) return {R[i][i], last_diff};
  }
  throw domain_error("quadrature did not converge");
}

// Portable uniform draws from a 64-bit engine.
struct Sampler {
  std::mt19937_64 eng;
  explicit Sampler(std::uint64_t seed) : eng(seed) {}
  double uniform(double a, double b) { return a + (b - a) * static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  long integer(long a, long b) { return a + static_cast<long>(eng() % static_cast<std::uint64_t>(b - a + 1)); }
};

GammaMatrix random_gamma(Sampler& s) {
  const long c = s.integer(1, 20);
  long d = 0;
  do {
    d = s.integer(-20, 20);
  } while (std::gcd(c, d) != 1);
  // a d = 1 (mod c)
  long a = 0;
  if (c > 1) {
    for (a = 0; a < c; ++a) {
      if (((a * d - 1) % c + c) % c == 0) break;
    }
  }
  const long b = (a * d - 1) / c;
  return make_gamma(a, b, c, d);
}

ComplexHP random_point(Sampler& s, double re_lo, double re_hi, double im_lo, double im_hi, long prec) {
  const double re = s.uniform(re_lo, re_hi);
  const double im = s.uniform(im_lo, im_hi);
  return ComplexHP::from_complex({re, im}, prec);
}

}  // namespace

double check_product_transform(const ProductSpec& spec, long h, long k, const ComplexHP& z,
                               std::span<const long> hbar_override) {
  if (!z.re().positive()) throw usage_error("check_product_transform needs Re z > 0");
  const long p = z.precision();
  const TransformData td = transform_data(spec, h, k, hbar_override);
  const ComplexHP lhs = lhs_product(spec, h, k, z);
  const UnitPhase phase = td.prefactor * td.omega_hk.pow(2) * td.upsilon;
  const Enclosure c = Enclosure::pi(p) / Enclosure(12 * k, p);
  const ComplexHP expo =
      (z * Enclosure::from_rational(td.omega, p) + ComplexHP::one(p) / z * Enclosure::from_rational(td.delta, p)) * c;
  const ComplexHP rhs = ComplexHP::unit(phase.turns_of_pi(), p) * exp(expo) * transformed_product(td, z);
  return relative_residual(lhs, rhs);
}

double check_factorization(const ProductSpec& spec, long h, long k, const ComplexHP& z) {
  if (!z.re().positive()) throw usage_error("check_factorization needs Re z > 0");
  const long p = z.precision();
  const TransformData td = transform_data(spec, h, k);
  const ComplexHP direct = transformed_product(td, z);
  const ComplexHP i_over_z = ComplexHP::i(p) / z;
  ComplexHP split = ComplexHP::one(p);
  for (const auto& root : td.pi) {
    const ComplexHP xi = ComplexHP::unit(root.t * Rational(2), p);
    split *= pow_si(ComplexHP::one(p) - xi, root.multiplicity);
  }
  for (const auto& ft : td.factors) {
    const ComplexHP tau = linear_value(ft.tau_re, ft.tau_im, i_over_z);
    if (ft.lambda_star.sign() == 0) {
      const ComplexHP q = nome(tau);
      const ComplexHP xi = ComplexHP::unit(ft.sigma_re * Rational(2), p);
      split *= pow_si(pochhammer(xi * q, q) * pochhammer(q / xi, q), ft.factor.delta);
    } else {
      split *= psi_power(linear_value(ft.sigma_re, ft.sigma_im, i_over_z), tau, ft.factor.delta);
    }
  }
  return relative_residual(split, direct);
}

MobiusForms mobius_forms(const PsiFactor& f, long h, long k, long hbar) {
  const long d = std::gcd(f.m, k);
  const long mp = f.m / d, kp = k / d;
  const long num = hbar * mp * h + 1;
  if (num % kp != 0) throw domain_error("mobius_forms: hbar does not solve the congruence");
  const GammaMatrix g = make_gamma(hbar, -(num / kp), kp, -mp * h);
  // m tau = m h/k + (m/k) w with w = i z
  const Rational t0(f.m * h, k), t1(f.m, k);
  const Rational n0 = Rational(g.a) * t0 + Rational(g.b), n1 = Rational(g.a) * t1;
  const Rational d0 = Rational(g.c) * t0 + Rational(g.d), d1 = Rational(g.c) * t1;
  if (d0.sign() != 0) throw domain_error("mobius_forms: c m tau + d is not a pure multiple of i z");
  // N/(d1 w) with 1/w = -i/z
  const LinearForm tau{n1 / d1, -(n0 / d1)};
  // r tau gamma* = r (h + w)/(k d1 w)
  const Rational kd1 = Rational(k) * d1;
  const long lambda = lambda_pair(f.m, f.r, h, k).lambda;
  const LinearForm sigma{Rational(f.r) / kd1 + Rational(lambda) * tau.re,
                         -(Rational(f.r * h) / kd1) + Rational(lambda) * tau.im_coeff};
  return {tau, sigma};
}

bool closed_forms_agree(const ProductSpec& spec, long h, long k) {
  const TransformData td = transform_data(spec, h, k);
  for (const auto& ft : td.factors) {
    const MobiusForms mf = mobius_forms(ft.factor, h, k, ft.hbar);
    if (!(mf.tau == LinearForm{ft.tau_re, ft.tau_im}) || !(mf.sigma == LinearForm{ft.sigma_re, ft.sigma_im})) {
      return false;
    }
  }
  return true;
}

std::complex<double> product_value(const ProductSpec& spec, std::complex<double> tau) {
  using namespace std::complex_literals;
  const std::complex<double> q = std::exp(2.0 * std::numbers::pi * 1i * tau);
  std::complex<double> out = 1.0;
  for (const auto& f : spec.factors()) {
    const std::complex<double> qm = std::pow(q, static_cast<double>(f.m));
    std::complex<double> part = 1.0;
    for (long a : {f.r, f.m - f.r}) {
      std::complex<double> term = std::pow(q, static_cast<double>(a));
      while (std::abs(term) > 1e-19) {
        part *= 1.0 - term;
        term *= qm;
      }
    }
    out *= std::pow(part, static_cast<double>(f.delta));
  }
  return out;
}

long default_farey_order(long n) {
  return std::max(2L, std::lround(std::pow(25.0 * static_cast<double>(std::max(n, 1L)), 0.25)));
}

NumericCoefficient numeric_coefficient(const ProductSpec& spec, long n, long N) {
  if (n < 0 || N < 2) throw usage_error("numeric_coefficient needs n >= 0 and N >= 2");
  using namespace std::complex_literals;
  constexpr double pi = std::numbers::pi;
  const double rho = 1.0 / static_cast<double>(N * N);
  NumericCoefficient out;
  out.order = N;
  std::complex<double> total = 0;
  double err = 0;
  for (const auto& arc : farey_arcs(N)) {
    const double center = static_cast<double>(arc.h) / static_cast<double>(arc.k);
    auto g = [&](double phi) {
      const std::complex<double> tau(center + phi, rho);
      return product_value(spec, tau) * std::exp(2.0 * pi * static_cast<double>(n) * rho) *
             std::exp(-2.0 * pi * 1i * static_cast<double>(n) * phi);
    };
    const auto [val, e] = romberg<double>(g, -arc.theta1.to_double(), arc.theta2.to_double(), 1e-10, 0.0, out.evaluations);
    total += std::exp(-2.0 * pi * 1i * static_cast<double>(n) * center) * val;
    err += e;
  }
  out.imag = total.imag();
  out.error_estimate = err + 1e-12 * std::abs(total.real());
  out.value = Enclosure::hull_of(total.real() - out.error_estimate, total.real() + out.error_estimate, 64);
  return out;
}

Lemma22Report lemma22_spotcheck(double a, double b, long h, long k, long n, long N) {
  if (!(a > 0)) throw usage_error("lemma22_spotcheck needs a > 0");
  if (!(static_cast<double>(n) > b / 24.0) || n < 1) throw usage_error("lemma22_spotcheck needs n > b/24");
  if (k < 1 || k > N || h < 0 || h >= k || std::gcd(h, k) != 1) throw usage_error("(h,k) must be an arc of order N");
  using LD = long double;
  using namespace std::complex_literals;
  const LD pi = std::numbers::pi_v<LD>;
  const LD rho = LD(1) / (LD(N) * LD(N));
  const auto arcs = farey_arcs(N);
  const auto it = std::find_if(arcs.begin(), arcs.end(), [&](const FareyArc& x) { return x.h == h && x.k == k; });
  const LD t1 = static_cast<LD>(it->theta1.to_double()), t2 = static_cast<LD>(it->theta2.to_double());
  auto g = [&](LD phi) {
    const Cx<LD> z = LD(k) * Cx<LD>(rho, -phi);
    const Cx<LD> e = pi / (LD(12) * LD(k)) * (LD(b) * z + LD(a) / z) - LD(2) * pi * Cx<LD>(0, 1) * LD(n) * phi +
                     LD(2) * pi * LD(n) * rho;
    return std::exp(e);
  };
  const double nb = static_cast<double>(n) + b / 24.0;
  const double bound = std::exp(std::numbers::pi * a / 3.0) *
                       std::exp(2.0 * std::numbers::pi * static_cast<double>(rho) * nb) / (std::numbers::pi * nb);
  long evals = 0;
  // The integrand peaks far above the integral, so convergence is judged against the bound.
  const auto [I, e] = romberg<LD>(g, -t1, t2, LD(1e-15), LD(1e-9) * LD(bound), evals);
  Lemma22Report r{a, b, h, k, n, N, {}, 0, 0, 0, false};
  r.quadrature_error = static_cast<double>(e);
  r.integral = {static_cast<double>(I.real()), static_cast<double>(I.imag())};
  const double m24 = 24.0 * static_cast<double>(n) + b;
  const double x = std::numbers::pi / (6.0 * static_cast<double>(k)) * std::sqrt(a * m24);
  r.main = 2.0 * std::numbers::pi / static_cast<double>(k) / std::sqrt(m24 / a) * std::cyl_bessel_i(1.0, x);
  r.error = std::abs(r.integral - std::complex<double>(r.main, 0));
  r.bound = bound;
  r.holds = r.error + r.quadrature_error <= r.bound;
  return r;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"eta", "theta", "quasi", "psi", "product", "factorization", "mobius"};
  return names;
}

IdentityReport run_identity_check(const std::string& identity, long samples, std::uint64_t seed, long prec) {
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), identity) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw usage_error("unknown identity '" + identity + "' (expected one of: " + list + ")");
  }
  if (samples < 1) throw usage_error("samples must be positive");
  Sampler s(seed);
  const SpecRegistry& reg = SpecRegistry::builtin();
  const char* spec_names[] = {"A", "B", "D"};
  IdentityReport rep{identity, samples, 0.0, prec, seed};
  for (long i = 0; i < samples; ++i) {
    double r = 0;
    if (identity == "eta") {
      const GammaMatrix g = random_gamma(s);
      r = eta_transform_residual(g, random_point(s, -0.5, 0.5, 0.5, 2.0, prec));
    } else if (identity == "theta") {
      const GammaMatrix g = random_gamma(s);
      const ComplexHP sigma = random_point(s, -0.5, 0.5, -0.25, 0.25, prec);
      r = theta_transform_residual(g, sigma, random_point(s, -0.5, 0.5, 0.5, 2.0, prec));
    } else if (identity == "quasi") {
      const long A = s.integer(-2, 2), B = s.integer(-3, 3);
      const ComplexHP sigma = random_point(s, -0.5, 0.5, -0.25, 0.25, prec);
      r = quasi_periodicity_residual(A, B, sigma, random_point(s, -0.5, 0.5, 0.5, 2.0, prec));
    } else if (identity == "psi") {
      const ComplexHP sigma = random_point(s, -0.5, 0.5, -0.25, 0.25, prec);
      r = psi_routes_residual(sigma, random_point(s, -0.5, 0.5, 0.5, 2.0, prec));
    } else {
      const ProductSpec& spec = reg.at(spec_names[s.integer(0, 2)]);
      const long k = s.integer(1, 12);
      long h = 0;
      do {
        h = s.integer(0, k - 1);
      } while (std::gcd(h, k) != 1);
      if (identity == "mobius") {
        r = closed_forms_agree(spec, h, k) ? 0.0 : 1.0;
      } else {
        const ComplexHP z = random_point(s, 0.5, 1.5, -0.5, 0.5, prec);
        r = identity == "product" ? check_product_transform(spec, h, k, z) : check_factorization(spec, h, k, z);
      }
    }
    rep.max_residual = std::max(rep.max_residual, r);
  }
  return rep;
}

}  // namespace qsign
