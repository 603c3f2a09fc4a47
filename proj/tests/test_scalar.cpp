#include <limits>
#include <cmath>
#include <random>

#include "doctest.h"

#include "coarselen/scalar.hpp"
#include "coarselen/verify.hpp"

using namespace coarselen;

namespace {

// Distance in units in the last place between two finite doubles of equal sign.
long ulp_distance(double a, double b) {
  if (a == b) return 0;
  long steps = 0;
  double lo = std::min(a, b), hi = std::max(a, b);
  while (lo < hi && steps < 100) {
    lo = std::nextafter(lo, hi);
    ++steps;
  }
  return steps;
}

}  // namespace

TEST_CASE("exact field arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  const Rational x(7, 9);
  CHECK(x + 0 == x);
  CHECK(x * 1 == x);
  CHECK((Rational(2, 6)).str() == "1/3");
  CHECK(Rational(-4, -8).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("to_float rounds to nearest") {
  CHECK(to_float(Rational(1, 3)) == 0.3333333333333333);
  CHECK(to_float(Rational(0)) == 0.0);
  CHECK(to_float(Rational(2, 6)) == to_float(Rational(1, 3)));
}

TEST_CASE("golden gap constant") {
  // 50-digit value of (3 - sqrt 5)/2, rounded to double through the exact parser.
  const Rational hp = Rational::parse("0.38196601125010515179541316563436188227969082019424");
  CHECK(ulp_distance(hp.to_double(), kGoldenGap) <= 1);
  CHECK(ulp_distance((3.0 - std::sqrt(5.0)) / 2.0, 0.3819660112501051) <= 1);
  CHECK(is_golden_gap_root(kGoldenGap, 1e-15));
  CHECK_FALSE(is_golden_gap_root(Rational(38, 100)));
  CHECK_FALSE(is_golden_gap_root(Rational(1, 3)));
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1e-3") == Rational(-1, 1000));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("+2.5E1") == Rational(25));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK(parse_double("1/4") == 0.25);
  CHECK(parse_double("0.1") == 0.1);
  CHECK_THROWS_AS(parse_double("0.1x"), Error);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("scalar modes") {
  const Scalar a = Scalar::parse("1/3", Mode::Exact), b = Scalar::parse("1/6", Mode::Exact);
  CHECK((a + b).str() == "1/2");
  CHECK((1 - a).str() == "2/3");
  CHECK((a * 3) == 1);
  CHECK(a.mode() == Mode::Exact);

  const Scalar f = Scalar::real(0.5);
  CHECK((f + 1).to_double() == 1.5);
  CHECK((f + 1).mode() == Mode::Float);
  CHECK(f.str() == "0.5");

  SUBCASE("mixing modes is an error") {
    try {
      (void)(a + f);
      FAIL("expected mode mismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ModeMismatch);
    }
    CHECK_THROWS_AS((void)(a < f), Error);
  }
  SUBCASE("division by zero") {
    CHECK_THROWS_AS(a / Scalar::integer(0, Mode::Exact), Error);
    CHECK_THROWS_AS(f / Scalar::real(0.0), Error);
  }
  CHECK(abs(Scalar::parse("-2/3", Mode::Exact)).str() == "2/3");
  CHECK_THROWS_AS((void)f.rational(), Error);
}

// Rounding the operands already costs up to half an ulp each, so the bound is
// 2 eps relative for * and /, and 2 eps of the operand scale for + and -
// (cancellation can leave the result itself arbitrarily many ulps off).
TEST_CASE("property: float image of exact ops is within 2 ulp") {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = random_rational(rng, 1000, 997), b = random_rational(rng, 1000, 991);
    const double fa = a.to_double(), fb = b.to_double();
    const double scale = std::abs(fa) + std::abs(fb);
    CHECK(std::abs((a + b).to_double() - (fa + fb)) <= 2 * eps * scale);
    CHECK(std::abs((a - b).to_double() - (fa - fb)) <= 2 * eps * scale);
    const double p = (a * b).to_double();
    CHECK(std::abs(p - fa * fb) <= 2 * eps * std::abs(p));
    if (b.sign() != 0) {
      const double q = (a / b).to_double();
      CHECK(std::abs(q - fa / fb) <= 2 * eps * std::abs(q));
    }
    if (a.sign() * b.sign() > 0) CHECK(ulp_distance((a + b).to_double(), fa + fb) <= 2);
  }
}

TEST_CASE("property: field axioms hold exactly") {
  Rng rng(2);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == 0);
    if (a.sign() != 0) CHECK(a / a == 1);
  }
}
