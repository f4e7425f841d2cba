#include "qsign/qseries.hpp"

#include <string>
#include <utility>

#include "qsign/errors.hpp"

namespace qsign {

QSeries::QSeries(std::size_t trunc_order) : coeffs_(trunc_order + 1) {}

QSeries::QSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw usage_error("QSeries needs at least one coefficient");
}

QSeries QSeries::one(std::size_t trunc_order) {
  QSeries s(trunc_order);
  s.coeffs_[0] = 1;
  return s;
}

const mpz_class& QSeries::at(std::size_t n) const {
  if (n > trunc_order()) {
    throw usage_error("index " + std::to_string(n) + " exceeds truncation order " +
                      std::to_string(trunc_order()));
  }
  return coeffs_[n];
}

void QSeries::mul_one_minus_q_pow(std::size_t e) {
  if (e == 0) throw usage_error("(1 - q^0) is not a unit factor");
  const std::size_t N = trunc_order();
  if (e > N) return;
  for (std::size_t n = N; n >= e; --n) coeffs_[n] -= coeffs_[n - e];
}

void QSeries::div_one_minus_q_pow(std::size_t e) {
  if (e == 0) throw usage_error("(1 - q^0) is not invertible");
  const std::size_t N = trunc_order();
  for (std::size_t n = e; n <= N; ++n) coeffs_[n] += coeffs_[n - e];
}

QSeries ps_mul(const QSeries& a, const QSeries& b) {
  if (a.trunc_order() != b.trunc_order()) {
    throw usage_error("ps_mul: truncation orders differ (" + std::to_string(a.trunc_order()) +
                      " vs " + std::to_string(b.trunc_order()) + ")");
  }
  const std::size_t N = a.trunc_order();
  QSeries out(N);
  for (std::size_t i = 0; i <= N; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= N; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

QSeries ps_inv(const QSeries& a) {
  if (a[0] != 1) throw domain_error("ps_inv: constant term must be 1");
  const std::size_t N = a.trunc_order();
  QSeries b(N);
  b[0] = 1;
  mpz_class acc;
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(a[k]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
    }
    b[n] = -acc;
  }
  return b;
}

void apply_pochhammer(QSeries& s, const PochhammerFactor& f) {
  if (f.offset == 0 || f.modulus == 0) throw usage_error("Pochhammer offset and modulus must be positive");
  if (f.exponent == 0) throw usage_error("Pochhammer exponent must be nonzero");
  const std::size_t N = s.trunc_order();
  const int reps = f.exponent > 0 ? f.exponent : -f.exponent;
  for (std::size_t e = f.offset; e <= N; e += f.modulus) {
    for (int r = 0; r < reps; ++r) {
      if (f.exponent > 0) {
        s.mul_one_minus_q_pow(e);
      } else {
        s.div_one_minus_q_pow(e);
      }
    }
  }
}

QSeries expand_pochhammer(std::size_t a, std::size_t m, std::size_t N) {
  QSeries s = QSeries::one(N);
  apply_pochhammer(s, PochhammerFactor{a, m, 1});
  return s;
}

QSeries rr_sum_side(RRVariant variant, std::size_t N) {
  QSeries total(N);
  // running = 1/(q;q)_n
  QSeries running = QSeries::one(N);
  for (std::size_t n = 0;; ++n) {
    if (n > 0) running.div_one_minus_q_pow(n);
    const std::size_t shift = n * n + (variant == RRVariant::H ? n : 0);
    if (shift > N) break;
    for (std::size_t i = 0; i + shift <= N; ++i) total[i + shift] += running[i];
  }
  return total;
}

std::vector<IndexedSign> slice_signs(const QSeries& s, long residue, long modulus,
                                     std::size_t from, std::size_t to) {
  if (modulus <= 0) throw usage_error("slice_signs: modulus must be positive");
  if (to > s.trunc_order()) {
    throw usage_error("slice_signs: range end " + std::to_string(to) + " exceeds truncation order " +
                      std::to_string(s.trunc_order()));
  }
  const long r = ((residue % modulus) + modulus) % modulus;
  std::vector<IndexedSign> out;
  for (std::size_t i = from; i <= to; ++i) {
    if (static_cast<long>(i % static_cast<std::size_t>(modulus)) != r) continue;
    out.push_back({i, sign_of(s[i])});
  }
  return out;
}

}  // namespace qsign
