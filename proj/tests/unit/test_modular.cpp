#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qsign/complex_hp.hpp"
#include "qsign/errors.hpp"
#include "qsign/modular.hpp"
#include "qsign/product_spec.hpp"

using namespace qsign;

namespace {

const ProductSpec& spec(const char* name) { return SpecRegistry::builtin().at(name); }

}  // namespace

TEST_SUITE("modular") {

TEST_CASE("sawtooth") {
  CHECK(sawtooth(Rational(3)) == Rational(0));
  CHECK(sawtooth(Rational(1, 2)) == Rational(0));
  CHECK(sawtooth(Rational(7, 3)) == Rational(-1, 6));
  CHECK(sawtooth(Rational(-1, 3)) == Rational(1, 6));
}

TEST_CASE("dedekind sum values") {
  CHECK(dedekind_sum(1, 1) == Rational(0));
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(-2, 5) == -dedekind_sum(2, 5));
  CHECK(dedekind_sum(2, 5) == Rational(0));
  CHECK(dedekind_sum(1, 5) == Rational(1, 5));
  CHECK_THROWS_AS(dedekind_sum(2, 4), domain_error);
  CHECK_THROWS_AS(dedekind_sum(1, 0), usage_error);
}

TEST_CASE("accelerated dedekind sum against the exact oracle") {
  for (long c = 1; c <= 80; ++c) {
    for (long d = -c; d <= 2 * c; ++d) {
      if (std::gcd(d, c) != 1) continue;
      CAPTURE(d);
      CAPTURE(c);
      CHECK(dedekind_sum(d, c) == Rational(oracle::dedekind_sum(d, c)));
    }
  }
}

TEST_CASE("accelerated dedekind sum against the definitional sum") {
  for (long c = 1; c <= 250; ++c) {
    for (long d = 0; d < c; ++d) {
      if (std::gcd(d, c) != 1) continue;
      REQUIRE(dedekind_sum(d, c) == dedekind_sum_definitional(d, c));
    }
  }
}

TEST_CASE("reciprocity for coprime pairs up to 200") {
  for (long c = 1; c <= 200; ++c) {
    for (long d = 1; d <= 200; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const Rational rhs = Rational(-1, 4) + (Rational(c, d) + Rational(d, c) + Rational(1, c * d)) / Rational(12);
      REQUIRE(dedekind_sum(d, c) + dedekind_sum(c, d) == rhs);
    }
  }
}

TEST_CASE("eta multiplier") {
  const GammaMatrix s = make_gamma(0, -1, 1, 0);
  CHECK(eta_multiplier(s).turns_of_pi() == Rational(7, 4));  // e^{-pi i/4}
  CHECK_THROWS_AS(make_gamma(1, 1, 1, 1), domain_error);
  CHECK_THROWS_AS(make_gamma(1, 0, 0, 1), domain_error);
  // chi(T S) relation: (a+d)/(12c) - s(d,c) - 1/4 at gamma = (1,-1;1,0)
  CHECK(eta_multiplier(make_gamma(1, -1, 1, 0)).turns_of_pi() == (Rational(1, 12) - Rational(1, 4)).mod(Rational(2)));
}

TEST_CASE("gamma_of") {
  CHECK(gamma_of(5, 1, 5) == GammaMatrix{0, -1, 1, -1});
  CHECK(hbar_of(5, 1, 5) == 0);
  CHECK(hbar_of(5, 1, 2) == 1);
  CHECK(gamma_of(5, 1, 2).a == 1);
  CHECK_THROWS_AS(gamma_of(5, 2, 4), domain_error);

  oracle::Rng rng(7);
  int tested = 0;
  while (tested < 200) {
    const long m = rng.uniform(1, 30);
    const long k = rng.uniform(1, 60);
    const long h = rng.uniform(0, k - 1);
    if (std::gcd(h, k) != 1) continue;
    const GammaMatrix g = gamma_of(m, h, k);
    const long d = std::gcd(m, k);
    CHECK(g.a * g.d - g.b * g.c == 1);
    CHECK(g.c == k / d);
    CHECK(((hbar_of(m, h, k) * (m / d) * h) % (k / d) + k / d) % (k / d) == (k / d == 1 ? 0 : k / d - 1));
    ++tested;
  }
}

TEST_CASE("lambda pair") {
  auto lp = lambda_pair(5, 2, 1, 5);
  CHECK(lp.lambda == 1);
  CHECK(lp.lambda_star == Rational(3, 5));
  lp = lambda_pair(5, 1, 2, 5);
  CHECK(lp.lambda == 1);
  CHECK(lp.lambda_star == Rational(3, 5));
  lp = lambda_pair(5, 3, 0, 1);
  CHECK(lp.lambda == 0);
  CHECK(lp.lambda_star == Rational(0));
  for (long k = 1; k <= 30; ++k) {
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      for (long r = 1; r < 5; ++r) {
        const auto p = lambda_pair(5, r, h, k);
        CHECK(p.lambda_star >= Rational(0));
        CHECK(p.lambda_star < Rational(1));
        CHECK(p.lambda_star == Rational(p.lambda) - Rational(r * h, std::gcd(5L, k)));
      }
    }
  }
}

TEST_CASE("Omega") {
  CHECK(omega_of(spec("A")).value == Rational(-24));
  CHECK(omega_of(spec("B")).value == Rational(24));
  CHECK(omega_of(spec("D")).value == Rational(0));
  CHECK(omega_of(spec("A")).integral);
  const OmegaValue odd = omega_of(ProductSpec({{1, 7, 1}}));
  CHECK_FALSE(odd.integral);
}

TEST_CASE("Delta values") {
  CHECK(delta_of(spec("A"), 1, 5) == Rational(24));
  CHECK(delta_of(spec("A"), 4, 5) == Rational(24));
  CHECK(delta_of(spec("A"), 2, 5) == Rational(-24));
  CHECK(delta_of(spec("A"), 3, 5) == Rational(-24));
  CHECK(delta_of(spec("B"), 2, 5) == Rational(24));
  CHECK(delta_of(spec("B"), 1, 5) == Rational(-24));
  for (const auto& row : delta_table(spec("D"))) {
    if (row.delta > Rational(0)) CHECK(row.delta == Rational(24));
  }
  CHECK_THROWS_AS(delta_of(spec("A"), 0, 5), domain_error);
  // the literal variant keeps only -sum delta 2 d^2/m, which vanishes on these classes
  CHECK(delta_hk_literal_variant(spec("A"), 1, 5) == Rational(0));
  CHECK(delta_hk_literal_variant(spec("A"), 1, 5) != delta_hk(spec("A"), 1, 5));
}

TEST_CASE("positive classes") {
  using P = std::pair<long, long>;
  CHECK(lpos_set(spec("A")) == std::vector<P>{{1, 5}, {4, 5}});
  CHECK(lpos_set(spec("B")) == std::vector<P>{{2, 5}, {3, 5}});
  std::vector<P> want;
  for (long l : {5L, 10L, 15L, 20L}) {
    for (long a = 0; a < l; ++a) {
      if (a % 5 == 1 || a % 5 == 4) want.emplace_back(a, l);
    }
  }
  CHECK(lpos_set(spec("D")) == want);
}

TEST_CASE("delta table covers every class with a coprime member, sorted by (l, aleph)") {
  for (const char* name : {"A", "B", "D"}) {
    const auto rows = delta_table(spec(name));
    const long L = spec(name).level();
    std::size_t expected = 0;
    for (long l = 1; l <= L; ++l) {
      for (long a = 0; a < l; ++a) {
        if (class_representative(L, a, l).has_value()) ++expected;
      }
    }
    CHECK(rows.size() == expected);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(std::make_pair(rows[i - 1].l, rows[i - 1].aleph) < std::make_pair(rows[i].l, rows[i].aleph));
    }
  }
}

TEST_CASE("Delta is a class invariant") {
  for (const char* name : {"A", "B", "C", "D", "c", "d"}) {
    const ProductSpec& s = spec(name);
    const long L = s.level();
    for (long l = 1; l <= L; ++l) {
      for (long a = 0; a < l; ++a) {
        const auto reps = class_representatives(L, a, l, 50);
        if (reps.empty()) continue;
        CHECK(reps.size() == 50);
        const Rational d0 = delta_hk(s, reps.front().first, reps.front().second);
        for (const auto& [h, k] : reps) {
          REQUIRE(k % L == l % L);
          REQUIRE(h % l == a);
          REQUIRE(std::gcd(h, k) == 1);
          REQUIRE(delta_hk(s, h, k) == d0);
        }
      }
    }
  }
}

TEST_CASE("hbar independence of the exact phases") {
  for (const char* name : {"A", "B", "D"}) {
    const ProductSpec& s = spec(name);
    for (long k = 1; k <= 30; ++k) {
      for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        const TransformData base = transform_data(s, h, k);
        std::vector<long> shifted;
        for (const auto& f : base.factors) shifted.push_back(f.hbar + f.k_prime);
        const TransformData alt = transform_data(s, h, k, shifted);
        CHECK(alt.upsilon == base.upsilon);
        CHECK(alt.omega_hk == base.omega_hk);
        REQUIRE(alt.pi.size() == base.pi.size());
        for (std::size_t i = 0; i < base.pi.size(); ++i) {
          CHECK(alt.pi[i].t == base.pi[i].t);
          CHECK(alt.pi[i].multiplicity == base.pi[i].multiplicity);
        }
        for (std::size_t j = 0; j < base.factors.size(); ++j) {
          if (base.factors[j].lambda_star != Rational(0)) continue;
          // exp(2 pi i sigma~) only sees sigma~ mod 1
          CHECK((alt.factors[j].sigma_re - base.factors[j].sigma_re).is_integer());
          CHECK(alt.factors[j].sigma_im == base.factors[j].sigma_im);
        }
      }
    }
  }
  const std::vector<long> bad{0, 0};
  CHECK_THROWS_AS(transform_data(spec("A"), 1, 3, bad), domain_error);
}

TEST_CASE("transformed argument is never an integer when lambda* = 0") {
  for (const auto& name : SpecRegistry::builtin().names()) {
    const ProductSpec& s = spec(name.c_str());
    for (long k = 1; k <= 75; ++k) {
      for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        const TransformData td = transform_data(s, h, k);
        for (const auto& f : td.factors) {
          if (f.lambda_star != Rational(0)) continue;
          CHECK_FALSE(f.sigma_re.is_integer());
        }
      }
    }
  }
}

TEST_CASE("phase data") {
  const PhaseData a15 = phase_data(spec("A"), 1, 5);
  CHECK(a15.pi.empty());
  for (const char* name : {"A", "B", "D"}) {
    CHECK(phase_data(spec(name), 0, 1).omega.turns_of_pi() == Rational(0));
  }

  // |Pi_{1,5}| for D equals cos(pi/5)/(1 + cos(2 pi/5))
  const long prec = 128;
  const PhaseData d15 = phase_data(spec("D"), 1, 5);
  REQUIRE_FALSE(d15.pi.empty());
  ComplexHP pi = ComplexHP::one(prec);
  for (const auto& r : d15.pi) {
    const ComplexHP f = ComplexHP::one(prec) - ComplexHP::unit(Rational(2) * r.t, prec);
    pi *= pow_si(f, r.multiplicity);
  }
  const Enclosure want = cos_pi(Rational(1, 5), prec) / (Enclosure(1, prec) + cos_pi(Rational(2, 5), prec));
  CHECK(pi.abs().intersects(want));
  CHECK(pi.abs().width().hi_double() < 1e-30);
}

}  // TEST_SUITE
