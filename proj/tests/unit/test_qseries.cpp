#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qsign/errors.hpp"
#include "qsign/product_spec.hpp"
#include "qsign/qseries.hpp"

using namespace qsign;

namespace {

QSeries poly(std::vector<long> c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return QSeries(std::move(v));
}

std::vector<mpz_class> as_vector(const QSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("length is always trunc_order + 1") {
  for (std::size_t N : {0u, 1u, 7u, 100u}) {
    QSeries s(N);
    CHECK(s.coeffs().size() == N + 1);
    CHECK(s.trunc_order() == N);
    s.mul_one_minus_q_pow(3);
    s.div_one_minus_q_pow(2);
    CHECK(s.coeffs().size() == N + 1);
  }
  CHECK_THROWS_AS(QSeries(5).at(6), usage_error);
  CHECK_THROWS_AS(QSeries::one(5).mul_one_minus_q_pow(0), usage_error);
}

TEST_CASE("ps_mul") {
  CHECK(ps_mul(poly({1, 1, 0}), poly({1, -1, 0})) == poly({1, 0, -1}));
  const QSeries s = expand_pochhammer(1, 5, 40);
  CHECK(ps_mul(s, QSeries::one(40)) == s);
  CHECK_THROWS_AS(ps_mul(QSeries(3), QSeries(4)), usage_error);

  const QSeries e = expand_pochhammer(1, 1, 20);
  CHECK(ps_mul(e, ps_inv(e)) == QSeries::one(20));
}

TEST_CASE("ps_inv") {
  CHECK(ps_inv(poly({1, -1, 0, 0})) == poly({1, 1, 1, 1}));
  const QSeries s = expand_pochhammer(1, 5, 50);
  CHECK(ps_inv(ps_inv(s)) == s);
  CHECK_THROWS_AS(ps_inv(poly({2, 1})), domain_error);
  CHECK_THROWS_AS(ps_inv(poly({0, 1})), domain_error);

  const QSeries p = ps_inv(expand_pochhammer(1, 1, 12));
  const std::vector<long> want{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  const auto brute = oracle::partitions_by_enumeration(12);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(p[n] == want[n]);
    CHECK(p[n] == brute[n]);
  }
}

TEST_CASE("partition numbers against enumeration up to 30") {
  const QSeries p = ps_inv(expand_pochhammer(1, 1, 30));
  const auto brute = oracle::partitions_by_enumeration(30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(p[n] == brute[n]);
}

TEST_CASE("expand_pochhammer") {
  CHECK(expand_pochhammer(1, 1, 7) == poly({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(as_vector(expand_pochhammer(1, 1, 7)) == oracle::direct_product({{1, 1, 1}}, 7));
  CHECK(expand_pochhammer(9, 4, 8) == QSeries::one(8));
  for (std::size_t a = 1; a <= 10; ++a) {
    for (std::size_t N = a; N < 2 * a; ++N) CHECK(expand_pochhammer(a, 7, N)[a] == -1);
  }
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t m = a; m <= 8; ++m) {
      CHECK(as_vector(expand_pochhammer(a, m, 60)) ==
            oracle::direct_product({{static_cast<long>(a), static_cast<long>(m), 1}}, 60));
    }
  }
}

TEST_CASE("expand_product base values") {
  const auto& reg = SpecRegistry::builtin();
  CHECK(expand_product(reg.at("A"), 0) == QSeries::one(0));
  const QSeries a = expand_product(reg.at("A"), 4);
  CHECK(sgn(a[1]) > 0);
  CHECK(sgn(a[2]) > 0);
  CHECK(sgn(a[3]) > 0);
  CHECK(sgn(a[4]) < 0);
  CHECK(sgn(expand_product(reg.at("B"), 5)[5]) < 0);
}

TEST_CASE("expand_product against direct polynomial products") {
  const auto& reg = SpecRegistry::builtin();
  for (const auto& name : reg.names()) {
    CAPTURE(name);
    std::vector<std::tuple<long, long, long>> psi;
    for (const auto& f : reg.at(name).factors()) psi.emplace_back(f.r, f.m, f.delta);
    CHECK(as_vector(expand_product(reg.at(name), 60)) == oracle::direct_psi_product(psi, 60));
  }
}

TEST_CASE("two evaluation orders agree") {
  const auto& reg = SpecRegistry::builtin();
  for (const auto& name : reg.names()) {
    CAPTURE(name);
    const ProductSpec& s = reg.at(name);
    CHECK(expand_product(s, 400) == expand_product_via_inverse(s, 400));
    std::vector<PsiFactor> rev(s.factors().rbegin(), s.factors().rend());
    CHECK(expand_product(ProductSpec(rev), 400) == expand_product(s, 400));
  }
}

TEST_CASE("reciprocal specs multiply to one") {
  const auto& reg = SpecRegistry::builtin();
  CHECK(ps_mul(expand_product(reg.at("A"), 400), expand_product(reg.at("B"), 400)) == QSeries::one(400));
  CHECK(ps_mul(expand_product(reg.at("C"), 400), expand_product(reg.at("D"), 400)) == QSeries::one(400));
  CHECK(ps_mul(expand_product(reg.at("c"), 400), expand_product(reg.at("d"), 400)) == QSeries::one(400));
  for (const auto& name : reg.names()) {
    const ProductSpec& s = reg.at(name);
    CHECK(ps_mul(expand_product(s, 200), expand_product(s.negated(), 200)) == QSeries::one(200));
  }
}

TEST_CASE("Rogers-Ramanujan identities to 500") {
  const std::size_t N = 500;
  CHECK(rr_sum_side(RRVariant::G, 0) == QSeries::one(0));
  const QSeries g = ps_inv(ps_mul(expand_pochhammer(1, 5, N), expand_pochhammer(4, 5, N)));
  const QSeries h = ps_inv(ps_mul(expand_pochhammer(2, 5, N), expand_pochhammer(3, 5, N)));
  CHECK(rr_sum_side(RRVariant::G, N) == g);
  CHECK(rr_sum_side(RRVariant::H, N) == h);
  CHECK_FALSE(rr_sum_side(RRVariant::G, N) == h);
}

TEST_CASE("slice_signs") {
  const auto& reg = SpecRegistry::builtin();
  const QSeries a = expand_product(reg.at("A"), 800);
  const QSeries b = expand_product(reg.at("B"), 800);
  const auto sa = slice_signs(a, 0, 5, 5, 800);
  CHECK(sa.size() == 160);
  CHECK(std::all_of(sa.begin(), sa.end(), [](const IndexedSign& x) { return x.sign == Sign::Negative; }));
  const auto sb = slice_signs(b, 0, 5, 5, 800);
  CHECK(std::all_of(sb.begin(), sb.end(), [](const IndexedSign& x) { return x.sign == Sign::Negative; }));
  CHECK(sa.front().index == 5);
  CHECK(sa.back().index == 800);
  CHECK_THROWS_AS(slice_signs(a, 0, 5, 0, 801), usage_error);
  CHECK_THROWS_AS(slice_signs(a, 0, 0, 0, 10), usage_error);
}

TEST_CASE("sign patterns of A, B, C, D by direct inspection") {
  const auto& reg = SpecRegistry::builtin();
  struct Pattern {
    const char* spec;
    long residue;
    int sign;
    long from;
  };
  const std::vector<Pattern> patterns{
      {"A", 1, 1, 1}, {"A", 2, 1, 1}, {"A", 3, 1, 1}, {"A", 4, -1, 1},
      {"B", 1, -1, 1}, {"B", 2, 1, 1}, {"B", 3, -1, 1}, {"B", 4, 1, 1},
      {"C", 1, -1, 1}, {"C", 2, 1, 1}, {"C", 3, -1, 1}, {"C", 4, 1, 1}, {"C", 0, -1, 5},
      {"D", 2, 1, 1}, {"D", 3, 1, 1}, {"D", 4, -1, 1}, {"D", 0, -1, 5},
  };
  for (const auto& p : patterns) {
    const QSeries s = expand_product(reg.at(p.spec), 800);
    for (long n = p.from; n <= 800; ++n) {
      if (n % 5 != p.residue) continue;
      CAPTURE(p.spec);
      CAPTURE(n);
      CHECK(sgn(s[static_cast<std::size_t>(n)]) == p.sign);
    }
  }
}

}  // TEST_SUITE
