#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <mpfr.h>

namespace oracle {

std::vector<long> partitions_by_enumeration(int N) {
  std::vector<long> p(N + 1, 0);
  // Depth-first walk over all nonincreasing sequences with sum <= N.
  std::function<void(int, int)> walk = [&](int sum, int largest) {
    ++p[sum];
    for (int part = 1; part <= largest && sum + part <= N; ++part) walk(sum + part, part);
  };
  walk(0, N);
  return p;
}

namespace {

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, long N) {
  std::vector<mpz_class> c(N + 1, 0);
  for (long i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

std::vector<mpz_class> direct_product(const std::vector<std::tuple<long, long, long>>& pochhammers, long N) {
  std::vector<mpz_class> acc(N + 1, 0);
  acc[0] = 1;
  for (const auto& [a, m, e] : pochhammers) {
    for (long j = a; j <= N; j += m) {
      std::vector<mpz_class> f(N + 1, 0);
      f[0] = 1;
      if (e > 0) {
        f[j] = -1;
      } else {
        for (long t = j; t <= N; t += j) f[t] = 1;
      }
      for (long rep = 0; rep < std::labs(e); ++rep) acc = poly_mul(acc, f, N);
    }
  }
  return acc;
}

std::vector<mpz_class> direct_psi_product(const std::vector<std::tuple<long, long, long>>& psi, long N) {
  std::vector<std::tuple<long, long, long>> poch;
  for (const auto& [r, m, d] : psi) {
    poch.emplace_back(r, m, d);
    poch.emplace_back(m - r, m, d);
  }
  return direct_product(poch, N);
}

namespace {

mpq_class saw(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x.get_den() == 1) return 0;
  return x - mpq_class(fl) - mpq_class(1, 2);
}

}  // namespace

mpq_class dedekind_sum(long d, long c) {
  mpq_class s = 0;
  for (long n = 1; n < c; ++n) {
    mpq_class a(d * n, c), b(n, c);
    a.canonicalize();
    b.canonicalize();
    s += saw(a) * saw(b);
  }
  return s;
}

std::string bessel_i1(const std::string& x, long bits) {
  mpfr_t xx, half, term, sum, tmp;
  mpfr_inits2(bits, xx, half, term, sum, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_str(xx, x.c_str(), 10, MPFR_RNDN);
  mpfr_div_ui(half, xx, 2, MPFR_RNDN);
  mpfr_set(term, half, MPFR_RNDN);  // m = 0: (x/2)/(0! 1!)
  mpfr_set(sum, term, MPFR_RNDN);
  mpfr_sqr(tmp, half, MPFR_RNDN);
  for (long m = 1; m < 100000; ++m) {
    mpfr_mul(term, term, tmp, MPFR_RNDN);
    mpfr_div_ui(term, term, static_cast<unsigned long>(m * (m + 1)), MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (mpfr_zero_p(term) || (mpfr_get_exp(term) < mpfr_get_exp(sum) - bits - 4 && m > mpfr_get_d(half, MPFR_RNDN))) {
      break;
    }
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.40Re", sum);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clears(xx, half, term, sum, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

double bessel_i1_double(double x) { return std::cyl_bessel_i(1.0, x); }

Grid3 colored_series(long eta, long smax, long nmax, bool inverse) {
  Grid3 g(smax + 1, std::vector<std::vector<mpz_class>>(smax + 1, std::vector<mpz_class>(nmax + 1, 0)));
  g[0][0][0] = 1;
  // Multiply (or divide) by (1 - zeta q^k) and (1 - xi q^k) for k = 0..nmax, eta times each.
  for (long rep = 0; rep < eta; ++rep) {
    for (long k = 0; k <= nmax; ++k) {
      for (int var = 0; var < 2; ++var) {
        if (inverse) {
          // g /= (1 - w q^k): g[s][t][n] += g[s-1][t][n-k] in increasing order.
          for (long s = 0; s <= smax; ++s)
            for (long t = 0; t <= smax; ++t)
              for (long n = k; n <= nmax; ++n) {
                if (var == 0 && s >= 1) g[s][t][n] += g[s - 1][t][n - k];
                if (var == 1 && t >= 1) g[s][t][n] += g[s][t - 1][n - k];
              }
        } else {
          for (long s = smax; s >= 0; --s)
            for (long t = smax; t >= 0; --t)
              for (long n = nmax; n >= k; --n) {
                if (var == 0 && s >= 1) g[s][t][n] -= g[s - 1][t][n - k];
                if (var == 1 && t >= 1) g[s][t][n] -= g[s][t - 1][n - k];
              }
        }
      }
    }
  }
  return g;
}

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace oracle
