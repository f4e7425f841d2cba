#include "qsign/majorant.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace qsign {

namespace {

void require_unit_range(const Enclosure& v, const char* name) {
  if (mpfr_sgn(v.lo()) < 0 || mpfr_cmp_d(v.hi(), 0.99) > 0) {
    throw domain_error(std::string("majorization_check: ") + name + " must lie in [0, 0.99]");
  }
}

// -sum_{k>=0} log(1 - a x^k), enclosed; the tail after K factors uses -log(1-u) <= u/(1-u).
Enclosure neg_log_pochhammer(const Enclosure& a, const Enclosure& x, long prec, long& factors) {
  const Enclosure one(1, prec);
  Enclosure sum(0, prec);
  Enclosure xk = one;
  const Enclosure eps = pow_si(Enclosure(2, prec), -(prec + 4));
  for (long k = 0;; ++k) {
    const Enclosure u = a * xk;
    if (mpfr_sgn(u.hi()) == 0) return sum;
    // Remaining sum from k on is at most a x^k / ((1 - x)(1 - a)).
    const Enclosure tail = u / ((one - x) * (one - a));
    if (tail.certainly_less(eps) || k > 200000) {
      factors += k;
      return sum + Enclosure(0, prec).hull(tail);
    }
    sum -= log(one - u);
    xk *= x;
  }
}

std::vector<std::vector<mpz_class>> restricted_partitions(long s_max, long n_max) {
  // P[s][n]: partitions of n into parts of size <= s.
  std::vector<std::vector<mpz_class>> P(s_max + 1, std::vector<mpz_class>(n_max + 1, 0));
  P[0][0] = 1;
  for (long s = 1; s <= s_max; ++s) {
    for (long n = 0; n <= n_max; ++n) {
      P[s][n] = P[s - 1][n];
      if (n >= s) P[s][n] += P[s][n - s];
    }
  }
  return P;
}

using Grid = std::vector<std::vector<mpz_class>>;  // [s][n]

Grid convolve(const Grid& a, const Grid& b, long s_max, long n_max) {
  Grid out(s_max + 1, std::vector<mpz_class>(n_max + 1, 0));
  for (long s1 = 0; s1 <= s_max; ++s1) {
    for (long n1 = 0; n1 <= n_max; ++n1) {
      if (a[s1][n1] == 0) continue;
      for (long s2 = 0; s1 + s2 <= s_max; ++s2) {
        for (long n2 = 0; n1 + n2 <= n_max; ++n2) {
          if (b[s2][n2] != 0) mpz_addmul(out[s1 + s2][n1 + n2].get_mpz_t(), a[s1][n1].get_mpz_t(), b[s2][n2].get_mpz_t());
        }
      }
    }
  }
  return out;
}

Grid power(const Grid& base, long eta, long s_max, long n_max) {
  Grid acc(s_max + 1, std::vector<mpz_class>(n_max + 1, 0));
  acc[0][0] = 1;
  for (long i = 0; i < eta; ++i) acc = convolve(acc, base, s_max, n_max);
  return acc;
}

}  // namespace

MajorizationReport majorization_check(const Enclosure& alpha, const Enclosure& beta, const Enclosure& x) {
  require_unit_range(alpha, "alpha");
  require_unit_range(beta, "beta");
  require_unit_range(x, "x");
  const long prec = std::max({alpha.precision(), beta.precision(), x.precision()});
  const Enclosure one(1, prec);
  MajorizationReport r;
  r.log_lhs = neg_log_pochhammer(alpha, x, prec, r.factors) + neg_log_pochhammer(beta, x, prec, r.factors);
  const Enclosure d = square(one - x);
  r.log_rhs = alpha / (one - alpha) + alpha * x / d + beta / (one - beta) + beta * x / d;
  if (mpfr_lessequal_p(r.log_lhs.hi(), r.log_rhs.lo())) {
    r.verdict = Verdict::True;
  } else if (r.log_rhs.certainly_less(r.log_lhs)) {
    r.verdict = Verdict::False;
  }
  return r;
}

ColoredTable::ColoredTable(long eta, long s_max, long n_max) : eta_(eta), s_max_(s_max), n_max_(n_max) {
  if (eta < 1 || eta > 12 || n_max < 0 || n_max > 200 || s_max < 0 || s_max > 200) {
    throw usage_error("colored partition tables need 1 <= eta <= 12, 0 <= n <= 200, 0 <= s,t <= 200");
  }
  const auto P = restricted_partitions(s_max, n_max);
  Grid inv(s_max + 1, std::vector<mpz_class>(n_max + 1, 0));
  Grid dir(s_max + 1, std::vector<mpz_class>(n_max + 1, 0));
  for (long j = 0; j <= s_max; ++j) {
    // 1/(zeta;q) = sum zeta^j/(q;q)_j and (zeta;q) = sum (-1)^j q^{j(j-1)/2} zeta^j/(q;q)_j.
    const long shift = j * (j - 1) / 2;
    for (long m = 0; m <= n_max; ++m) {
      inv[j][m] = P[j][m];
      if (m >= shift) dir[j][m] = (j % 2 == 0 ? 1 : -1) * P[j][m - shift];
    }
  }
  inv_ = power(inv, eta, s_max, n_max);
  dir_ = power(dir, eta, s_max, n_max);
}

ColoredCounts ColoredTable::counts(long s, long t, long n) const {
  if (s < 0 || t < 0 || n < 0 || s > s_max_ || t > s_max_ || n > n_max_) {
    throw usage_error("colored partition query outside the table range");
  }
  ColoredCounts out;
  for (long m = 0; m <= n; ++m) {
    out.p_star += inv_[s][m] * inv_[t][n - m];
    out.d_star += dir_[s][m] * dir_[t][n - m];
  }
  return out;
}

ColoredCounts colored_partition_majorant(long eta, long s, long t, long n) {
  return ColoredTable(eta, std::max(s, t), n).counts(s, t, n);
}

}  // namespace qsign
