#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qsign/product_spec.hpp"
#include "qsign/rational.hpp"

namespace qsign {

/// ((x)) = x - floor(x) - 1/2 for non-integral x, 0 for integral x.
Rational sawtooth(const Rational& x);

/// Dedekind sum s(d, c) via the reciprocity-accelerated Euclidean recursion.
/// Requires c >= 1 and gcd(d, c) == 1 (domain_error otherwise).
Rational dedekind_sum(long d, long c);

/// Dedekind sum by its definition sum_{n mod c} ((dn/c))((n/c)). O(c).
Rational dedekind_sum_definitional(long d, long c);

/// Element of SL2(Z) with c > 0.
struct GammaMatrix {
  long a, b, c, d;
  friend bool operator==(const GammaMatrix&, const GammaMatrix&) = default;
};

/// Validates ad - bc == 1 and c > 0; throws domain_error otherwise.
GammaMatrix make_gamma(long a, long b, long c, long d);

/// e^{pi i t}, with t stored reduced into [0, 2).
class UnitPhase {
 public:
  UnitPhase() = default;
  explicit UnitPhase(const Rational& t) : t_(t.mod(Rational(2))) {}

  const Rational& turns_of_pi() const noexcept { return t_; }

  UnitPhase operator*(const UnitPhase& o) const { return UnitPhase(t_ + o.t_); }
  UnitPhase pow(long e) const { return UnitPhase(t_ * Rational(e)); }
  UnitPhase conj() const { return UnitPhase(-t_); }

  friend bool operator==(const UnitPhase&, const UnitPhase&) = default;

 private:
  Rational t_{0};
};

/// chi(gamma) = exp(pi i ((a+d)/(12c) - s(d,c) - 1/4)).
UnitPhase eta_multiplier(const GammaMatrix& g);

/// Canonical hbar_m(h,k): smallest nonnegative solution of hbar * m'h = -1 (mod k'), 0 when k' = 1.
long hbar_of(long m, long h, long k);

/// gamma_(m,h,k) = (hbar, -b_{m'}; k', -m'h). Requires 0 <= h < k, gcd(h,k) = 1.
GammaMatrix gamma_of(long m, long h, long k);

struct LambdaPair {
  long lambda;         // ceil(r h / gcd(m,k))
  Rational lambda_star;  // lambda - r h / gcd(m,k), in [0,1)
};

LambdaPair lambda_pair(long m, long r, long h, long k);

/// Omega = sum delta_j (2 m_j - 12 r_j + 12 r_j^2 / m_j). `integral` is false when the value is not an integer.
struct OmegaValue {
  Rational value;
  bool integral;
};

OmegaValue omega_of(const ProductSpec& spec);

/// Delta(h,k) = -sum delta_j (2 d_j^2/m_j + 12 d_j^2/m_j (lambda*_j^2 - lambda*_j)), d_j = gcd(m_j,k).
Rational delta_hk(const ProductSpec& spec, long h, long k);

/// The same sum with the literal "(lambda* - lambda*)" term, i.e. only -sum delta_j 2 d_j^2/m_j. Audit only.
Rational delta_hk_literal_variant(const ProductSpec& spec, long h, long k);

/// Smallest coprime (h,k) with k = l (mod L), h = aleph (mod l), 0 <= h < k; nullopt if the class has none.
std::optional<std::pair<long, long>> class_representative(long level, long aleph, long l);

/// Several coprime representatives of the class (aleph, l), in increasing k then h.
std::vector<std::pair<long, long>> class_representatives(long level, long aleph, long l, std::size_t count);

/// Delta(aleph, l) evaluated at the canonical class representative. domain_error if the class has no coprime member.
Rational delta_of(const ProductSpec& spec, long aleph, long l);

struct DeltaClass {
  long aleph;
  long l;
  Rational delta;
  Rational delta_literal_variant;
  bool in_lpos;
};

/// All classes 1 <= l <= L, 0 <= aleph < l that contain a coprime pair, sorted by (l, aleph).
std::vector<DeltaClass> delta_table(const ProductSpec& spec);

/// Classes with Delta > 0, sorted by (l, aleph).
std::vector<std::pair<long, long>> lpos_set(const ProductSpec& spec);

/// e^{2 pi i t}^multiplicity with t reduced into [0,1); one factor (1 - e^{2 pi i t})^multiplicity of Pi_{h,k}.
struct RootFactor {
  Rational t;
  long multiplicity;
};

/// Per-factor transformation data at the arc (h,k). Transformed arguments are exact
/// rational-linear forms in i/z:
///   tau~   = tau_re   + tau_im   * (i/z)
///   sigma~ = sigma_re + sigma_im * (i/z)
struct FactorTransform {
  PsiFactor factor;
  long d;        // gcd(m, k)
  long m_prime;  // m / d
  long k_prime;  // k / d
  long hbar;
  long b;        // (hbar m' h + 1) / k'
  long lambda;
  Rational lambda_star;
  Rational tau_re, tau_im;
  Rational sigma_re, sigma_im;
};

struct TransformData {
  long h, k;
  std::vector<FactorTransform> factors;
  Rational omega;
  Rational delta;
  UnitPhase prefactor;  // i^{sum delta} (-1)^{sum delta lambda}
  UnitPhase omega_hk;   // exp(-pi i sum delta_j s(m_j h / d_j, k / d_j))
  UnitPhase upsilon;
  std::vector<RootFactor> pi;  // factors j with lambda*_j = 0
};

/// Full transformation bookkeeping for the product at (h,k). `hbar_override`, when nonempty,
/// supplies hbar_j per factor (each must solve the defining congruence).
TransformData transform_data(const ProductSpec& spec, long h, long k,
                             std::span<const long> hbar_override = {});

struct PhaseData {
  UnitPhase omega;
  UnitPhase upsilon;
  std::vector<RootFactor> pi;
};

PhaseData phase_data(const ProductSpec& spec, long h, long k);

}  // namespace qsign
