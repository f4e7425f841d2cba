#pragma once

#include <vector>

#include <gmpxx.h>

#include "qsign/enclosure.hpp"
#include "qsign/errors.hpp"

namespace qsign {

struct MajorizationReport {
  Enclosure log_lhs;  // -sum log(1 - alpha x^k) - sum log(1 - beta x^k), tail included
  Enclosure log_rhs;  // alpha/(1-alpha) + alpha x/(1-x)^2 + beta/(1-beta) + beta x/(1-x)^2
  Verdict verdict = Verdict::Unknown;
  long factors = 0;
};

/// Checks 1/((alpha;x)_inf (beta;x)_inf) <= exp(alpha/(1-alpha) + alpha x/(1-x)^2 + beta/(1-beta) + beta x/(1-x)^2).
/// Parameters must lie in [0, 0.99]; closer to 1 is refused with domain_error.
MajorizationReport majorization_check(const Enclosure& alpha, const Enclosure& beta, const Enclosure& x);

struct ColoredCounts {
  mpz_class p_star;  // coefficient of zeta^s xi^t q^n in 1/((zeta;q)(xi;q))^eta
  mpz_class d_star;  // coefficient of zeta^s xi^t q^n in ((zeta;q)(xi;q))^eta
};

/// Single-color tables for one eta: inv[s][n] is the zeta^s q^n coefficient of (zeta;q)_inf^{-eta},
/// dir[s][n] that of (zeta;q)_inf^{eta}. Two-color counts are convolutions over n.
class ColoredTable {
 public:
  ColoredTable(long eta, long s_max, long n_max);
  ColoredCounts counts(long s, long t, long n) const;
  long eta() const noexcept { return eta_; }

 private:
  long eta_, s_max_, n_max_;
  std::vector<std::vector<mpz_class>> inv_, dir_;
};

/// Exact p*_eta(s,t;n) and d*_eta(s,t;n). Guarded to eta <= 12, n <= 200, s,t <= 200.
ColoredCounts colored_partition_majorant(long eta, long s, long t, long n);

}  // namespace qsign
