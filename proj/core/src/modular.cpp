#include "qsign/modular.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "qsign/errors.hpp"

namespace qsign {

namespace {

long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m (m >= 2, gcd(a,m) = 1).
long inverse_mod(long a, long m) {
  long old_r = floor_mod(a, m), r = m;
  long old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw domain_error("inverse_mod: arguments are not coprime");
  return floor_mod(old_s, m);
}

void require_arc(long h, long k) {
  if (k < 1 || h < 0 || h >= k) {
    throw usage_error("arc (h,k) needs 0 <= h < k (got h=" + std::to_string(h) + ", k=" + std::to_string(k) + ")");
  }
  if (std::gcd(h, k) != 1) {
    throw domain_error("arc (h,k) needs gcd(h,k) = 1 (got h=" + std::to_string(h) + ", k=" + std::to_string(k) + ")");
  }
}

void require_coprime(long d, long c) {
  if (c < 1) throw usage_error("Dedekind sum needs c >= 1");
  if (std::gcd(d, c) != 1) {
    throw domain_error("Dedekind sum s(" + std::to_string(d) + "," + std::to_string(c) + ") needs gcd = 1");
  }
}

}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x.frac() - Rational(1, 2);
}

Rational dedekind_sum(long d, long c) {
  require_coprime(d, c);
  // s(a,b) + s(b,a) = -1/4 + (a/b + b/a + 1/(ab))/12 for coprime positive a, b.
  Rational result(0);
  int sign = 1;
  long a = floor_mod(d, c);
  long b = c;
  while (a != 0) {
    const Rational ra(a), rb(b);
    Rational rec = Rational(-1, 4) + (ra / rb + rb / ra + Rational(1) / (ra * rb)) / Rational(12);
    if (sign < 0) rec = -rec;
    result += rec;
    sign = -sign;
    const long next_a = b % a;
    b = a;
    a = next_a;
  }
  return result;
}

Rational dedekind_sum_definitional(long d, long c) {
  require_coprime(d, c);
  // ((dn/c)) ((n/c)) = (2 r - c)(2 n - c) / (4 c^2) with r = dn mod c, since c never divides dn
  // for 0 < n < c. Terms are summed as exact integers; a long partial sum is flushed into mpz
  // before it can overflow.
  const long dm = floor_mod(d, c);
  const long flush = (std::numeric_limits<long>::max() / 2) - c * c;
  mpz_class total = 0;
  long acc = 0;
  long r = 0;
  for (long n = 1; n < c; ++n) {
    r += dm;
    if (r >= c) r -= c;
    acc += (2 * r - c) * (2 * n - c);
    if (acc > flush || acc < -flush) {
      total += acc;
      acc = 0;
    }
  }
  total += acc;
  return Rational(total, mpz_class(4) * c * c);
}

GammaMatrix make_gamma(long a, long b, long c, long d) {
  if (c <= 0) throw domain_error("gamma matrix needs c > 0");
  if (a * d - b * c != 1) throw domain_error("gamma matrix needs ad - bc = 1");
  return {a, b, c, d};
}

UnitPhase eta_multiplier(const GammaMatrix& g) {
  const Rational t = Rational(g.a + g.d, 12 * g.c) - dedekind_sum(g.d, g.c) - Rational(1, 4);
  return UnitPhase(t);
}

long hbar_of(long m, long h, long k) {
  require_arc(h, k);
  if (m < 1) throw usage_error("hbar_of needs m >= 1");
  const long d = std::gcd(m, k);
  const long mp = m / d, kp = k / d;
  if (kp == 1) return 0;
  return floor_mod(-inverse_mod(floor_mod(mp * h, kp), kp), kp);
}

GammaMatrix gamma_of(long m, long h, long k) {
  const long hb = hbar_of(m, h, k);
  const long d = std::gcd(m, k);
  const long mp = m / d, kp = k / d;
  const long num = hb * mp * h + 1;
  if (num % kp != 0) throw domain_error("gamma_of: b_{m'} is not integral");
  return make_gamma(hb, -(num / kp), kp, -mp * h);
}

LambdaPair lambda_pair(long m, long r, long h, long k) {
  require_arc(h, k);
  if (r < 1 || r >= m) throw usage_error("lambda_pair needs 1 <= r < m");
  const long d = std::gcd(m, k);
  const Rational x(r * h, d);
  const long lam = x.ceil().get_si();
  return {lam, Rational(lam) - x};
}

OmegaValue omega_of(const ProductSpec& spec) {
  Rational total(0);
  for (const auto& f : spec.factors()) {
    total += Rational(f.delta) * (Rational(2 * f.m - 12 * f.r) + Rational(12 * f.r * f.r, f.m));
  }
  return {total, total.is_integer()};
}

Rational delta_hk(const ProductSpec& spec, long h, long k) {
  require_arc(h, k);
  Rational total(0);
  for (const auto& f : spec.factors()) {
    const long d = std::gcd(f.m, k);
    const Rational ls = lambda_pair(f.m, f.r, h, k).lambda_star;
    const Rational d2m(d * d, f.m);
    total += Rational(f.delta) * (Rational(2) * d2m + Rational(12) * d2m * (ls * ls - ls));
  }
  return -total;
}

Rational delta_hk_literal_variant(const ProductSpec& spec, long h, long k) {
  require_arc(h, k);
  Rational total(0);
  for (const auto& f : spec.factors()) {
    const long d = std::gcd(f.m, k);
    total += Rational(f.delta) * Rational(2 * d * d, f.m);
  }
  return -total;
}

std::vector<std::pair<long, long>> class_representatives(long level, long aleph, long l, std::size_t count) {
  if (level < 1 || l < 1 || l > level || aleph < 0 || aleph >= l) {
    throw usage_error("class (aleph,l) needs 0 <= aleph < l <= L");
  }
  std::vector<std::pair<long, long>> reps;
  if (std::gcd(std::gcd(aleph, l), level) != 1) return reps;
  for (long s = 0; reps.size() < count && s < 100000; ++s) {
    const long k = l + s * level;
    for (long h = aleph; h < k && reps.size() < count; h += l) {
      if (std::gcd(h, k) == 1) reps.emplace_back(h, k);
    }
  }
  return reps;
}

std::optional<std::pair<long, long>> class_representative(long level, long aleph, long l) {
  auto reps = class_representatives(level, aleph, l, 1);
  if (reps.empty()) return std::nullopt;
  return reps.front();
}

Rational delta_of(const ProductSpec& spec, long aleph, long l) {
  const auto rep = class_representative(spec.level(), aleph, l);
  if (!rep) {
    throw domain_error("class (" + std::to_string(aleph) + "," + std::to_string(l) + ") has no coprime representative");
  }
  return delta_hk(spec, rep->first, rep->second);
}

std::vector<DeltaClass> delta_table(const ProductSpec& spec) {
  std::vector<DeltaClass> rows;
  const long L = spec.level();
  for (long l = 1; l <= L; ++l) {
    for (long a = 0; a < l; ++a) {
      const auto rep = class_representative(L, a, l);
      if (!rep) continue;
      const Rational dl = delta_hk(spec, rep->first, rep->second);
      rows.push_back({a, l, dl, delta_hk_literal_variant(spec, rep->first, rep->second), dl.sign() > 0});
    }
  }
  return rows;
}

std::vector<std::pair<long, long>> lpos_set(const ProductSpec& spec) {
  std::vector<std::pair<long, long>> out;
  for (const auto& row : delta_table(spec)) {
    if (row.in_lpos) out.emplace_back(row.aleph, row.l);
  }
  return out;
}

TransformData transform_data(const ProductSpec& spec, long h, long k, std::span<const long> hbar_override) {
  require_arc(h, k);
  if (!hbar_override.empty() && hbar_override.size() != spec.factors().size()) {
    throw usage_error("transform_data: hbar override needs one entry per factor");
  }
  TransformData td;
  td.h = h;
  td.k = k;
  td.omega = omega_of(spec).value;
  td.delta = delta_hk(spec, h, k);

  Rational prefactor_t(0), omega_t(0), upsilon_t(0);
  for (std::size_t j = 0; j < spec.factors().size(); ++j) {
    const PsiFactor& f = spec.factors()[j];
    FactorTransform ft;
    ft.factor = f;
    ft.d = std::gcd(f.m, k);
    ft.m_prime = f.m / ft.d;
    ft.k_prime = k / ft.d;
    ft.hbar = hbar_override.empty() ? hbar_of(f.m, h, k) : hbar_override[j];
    const long num = ft.hbar * ft.m_prime * h + 1;
    if (floor_mod(num, ft.k_prime) != 0) {
      throw domain_error("transform_data: hbar does not satisfy hbar m'h = -1 (mod k')");
    }
    ft.b = num / ft.k_prime;
    const LambdaPair lp = lambda_pair(f.m, f.r, h, k);
    ft.lambda = lp.lambda;
    ft.lambda_star = lp.lambda_star;

    const Rational d(ft.d), m(f.m), r(f.r), kk(k), hh(h), hb(ft.hbar), lam(ft.lambda);
    ft.tau_re = hb * d / kk;
    ft.tau_im = d * d / (m * kk);
    ft.sigma_re = r * d / (m * kk) + lam * hb * d / kk;
    ft.sigma_im = ft.lambda_star * d * d / (m * kk);

    const Rational delta(f.delta);
    prefactor_t += delta / Rational(2) + delta * lam;
    if (ft.k_prime > 1) omega_t -= delta * dedekind_sum(ft.m_prime * h, ft.k_prime);
    upsilon_t += delta * (r * hh / kk - r * d / (m * kk) + Rational(2) * r * d * ft.lambda_star / (m * kk) +
                          hb * d / kk * (lam * lam - lam));

    if (ft.lambda_star.sign() == 0) {
      const Rational t = (r * d + r * hb * m * hh) / (m * kk);
      if (t.is_integer()) throw domain_error("transform_data: Pi_{h,k} factor 1 - e^{2 pi i t} vanishes");
      td.pi.push_back({t.frac(), f.delta});
    }
    td.factors.push_back(std::move(ft));
  }
  td.prefactor = UnitPhase(prefactor_t);
  td.omega_hk = UnitPhase(omega_t);
  td.upsilon = UnitPhase(upsilon_t);
  return td;
}

PhaseData phase_data(const ProductSpec& spec, long h, long k) {
  TransformData td = transform_data(spec, h, k);
  return {td.omega_hk, td.upsilon, std::move(td.pi)};
}

}  // namespace qsign
