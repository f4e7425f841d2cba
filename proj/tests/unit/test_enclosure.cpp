#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qsign/enclosure.hpp"
#include "qsign/errors.hpp"

using namespace qsign;

TEST_SUITE("enclosure") {

TEST_CASE("construction and containment") {
  const Enclosure third = Enclosure::from_rational(Rational(1, 3), 128);
  CHECK(third.lo_double() <= 1.0 / 3.0);
  CHECK(third.hi_double() >= 1.0 / 3.0);
  CHECK(third.positive());
  CHECK(third.width().hi_double() < 1e-37);
  CHECK(Enclosure(5, 64).contains(5.0));
  CHECK(Enclosure(5, 64).width().hi_double() == 0.0);
  CHECK(Enclosure::pi(256).contains(Enclosure::pi(128)) == false);
  CHECK(Enclosure::pi(128).contains(Enclosure::pi(256)));
  CHECK_THROWS(Enclosure::hull_of(2.0, 1.0, 64));
}

TEST_CASE("operations contain the double-precision result") {
  oracle::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const double a = 0.1 + 5 * rng.unit();
    const double b = 0.1 + 5 * rng.unit();
    const Enclosure A = Enclosure::from_double(a, 160);
    const Enclosure B = Enclosure::from_double(b, 160);
    const double tol = 1e-13;
    auto near = [&](const Enclosure& e, double v) {
      return e.lo_double() <= v + tol * std::max(1.0, std::abs(v)) && v - tol * std::max(1.0, std::abs(v)) <= e.hi_double();
    };
    CHECK(near(A + B, a + b));
    CHECK(near(A - B, a - b));
    CHECK(near(A * B, a * b));
    CHECK(near(A / B, a / b));
    CHECK(near(sqrt(A), std::sqrt(a)));
    CHECK(near(exp(A), std::exp(a)));
    CHECK(near(log(A), std::log(a)));
    CHECK(near(cos(A), std::cos(a)));
    CHECK(near(sin(A), std::sin(a)));
    CHECK(near(pow(A, Rational(5, 4)), std::pow(a, 1.25)));
    CHECK(near(pow_si(A, -3), std::pow(a, -3)));
  }
}

TEST_CASE("p-bit and 2p-bit enclosures intersect and narrow") {
  for (long p : {64L, 128L, 256L, 512L}) {
    const Enclosure x = Enclosure::from_rational(Rational(7, 3), p);
    const Enclosure y = Enclosure::from_rational(Rational(7, 3), 2 * p);
    const Enclosure fx = exp(sqrt(x) * Enclosure::pi(p)) / (Enclosure(1, p) + cos(x));
    const Enclosure fy = exp(sqrt(y) * Enclosure::pi(2 * p)) / (Enclosure(1, 2 * p) + cos(y));
    CHECK(fx.intersects(fy));
    CHECK(fy.width().hi_double() <= fx.width().hi_double());
  }
}

TEST_CASE("exact trigonometric special values") {
  CHECK(cos_pi(Rational(1, 2), 128).contains(0.0));
  CHECK(cos_pi(Rational(1, 2), 128).width().hi_double() == 0.0);
  CHECK(cos_pi(Rational(1), 128).contains(-1.0));
  CHECK(sin_pi(Rational(1, 6), 128).contains(0.5));
  CHECK(cos_pi(Rational(1, 5), 128).positive());
  CHECK(cos_pi(Rational(3, 5), 128).negative());
  // cos(pi/5) = (1 + sqrt 5)/4
  const Enclosure golden = (Enclosure(1, 128) + sqrt(Enclosure(5, 128))) / Enclosure(4, 128);
  CHECK(cos_pi(Rational(1, 5), 128).intersects(golden));
}

TEST_CASE("division by an interval containing zero is refused") {
  const Enclosure z = Enclosure::hull_of(-1.0, 1.0, 64);
  CHECK_THROWS(Enclosure(1, 64) / z);
  CHECK(z.mig().hi_double() == 0.0);
  CHECK(z.mag().lo_double() == 1.0);
}

TEST_CASE("decimal output is rounded outward") {
  const Enclosure third = Enclosure::from_rational(Rational(1, 3), 128);
  CHECK(third.lo_string(5) == "3.3333e-01");
  CHECK(third.hi_string(5) == "3.3334e-01");
  CHECK(Enclosure::pi(128).to_string(6).find("3.14159") != std::string::npos);
}

}  // TEST_SUITE
