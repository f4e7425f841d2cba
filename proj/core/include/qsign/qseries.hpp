#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qsign {

/// Truncated formal power series sum_{n<=N} c_n q^n with exact integer coefficients.
///
/// The coefficient vector always has length trunc_order()+1; nothing ever
/// reads or writes past the truncation order.
class QSeries {
 public:
  /// Zero series truncated at order N.
  explicit QSeries(std::size_t trunc_order);
  /// Takes ownership of coefficients; the truncation order is coeffs.size()-1.
  explicit QSeries(std::vector<mpz_class> coeffs);

  static QSeries one(std::size_t trunc_order);

  std::size_t trunc_order() const noexcept { return coeffs_.size() - 1; }
  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }

  const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
  mpz_class& operator[](std::size_t n) { return coeffs_[n]; }
  /// Bounds-checked access; throws usage_error past the truncation order.
  const mpz_class& at(std::size_t n) const;

  /// In place: *this *= (1 - q^e). e == 0 is rejected.
  void mul_one_minus_q_pow(std::size_t e);
  /// In place: *this /= (1 - q^e), i.e. multiplication by sum_k q^{ek}.
  void div_one_minus_q_pow(std::size_t e);

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

/// One generalized Pochhammer symbol (q^a; q^m)_inf^e.
struct PochhammerFactor {
  std::size_t offset;   // a >= 1
  std::size_t modulus;  // m >= 1
  int exponent;         // e != 0
};

/// Exact truncated Cauchy product. Throws usage_error on mismatched truncation orders.
QSeries ps_mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse via b_n = -sum_{k=1..n} a_k b_{n-k}. Requires a_0 == 1 (domain_error otherwise).
QSeries ps_inv(const QSeries& a);

/// prod_{k>=0} (1 - q^{a+km}) truncated at order N.
QSeries expand_pochhammer(std::size_t a, std::size_t m, std::size_t N);

/// Multiplies s in place by (q^a; q^m)_inf^e (division for negative e).
void apply_pochhammer(QSeries& s, const PochhammerFactor& f);

enum class RRVariant { G, H };

/// Sum side of the Rogers-Ramanujan identities: sum_n q^{n^2 (+n)} / (q;q)_n.
QSeries rr_sum_side(RRVariant variant, std::size_t N);

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const mpz_class& v) {
  const int s = sgn(v);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

struct IndexedSign {
  std::size_t index;
  Sign sign;
};

/// Signs of the coefficients at indices i in [from, to] with i = residue (mod modulus).
/// Throws usage_error if to exceeds the truncation order or modulus is zero.
std::vector<IndexedSign> slice_signs(const QSeries& s, long residue, long modulus,
                                     std::size_t from, std::size_t to);

}  // namespace qsign
