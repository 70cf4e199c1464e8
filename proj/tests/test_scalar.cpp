#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wtoric/scalar.hpp"

#include <cmath>
#include <random>

using wtoric::Rational;
using wtoric::Scalar;

namespace {

std::mt19937 rng(20240811);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

Scalar random_scalar(std::int64_t d) {
  return Scalar(random_rational(), random_rational(), d);
}

} // namespace

TEST_CASE("construction and normalization") {
  Scalar zero;
  CHECK(zero.is_zero());
  CHECK(zero.disc() == 1);

  // b sqrt(1) folds into the rational part
  Scalar folded(Rational(2), Rational(3), 1);
  CHECK(folded == Scalar(5));
  CHECK(folded.is_rational());

  // zero irrational part drops the discriminant
  Scalar dropped(Rational(7, 2), Rational(0), 5);
  CHECK(dropped.disc() == 1);

  CHECK_THROWS_AS(Scalar(Rational(1), Rational(1), 12), wtoric::Error);  // 12 = 4*3
  CHECK_THROWS_AS(Scalar(Rational(1), Rational(1), -5), wtoric::Error);
}

TEST_CASE("mixed discriminants are rejected") {
  const Scalar a = Scalar::sqrt_of(2);
  const Scalar b = Scalar::sqrt_of(5);
  CHECK_THROWS_AS(a + b, wtoric::Error);
  CHECK_THROWS_AS(a * b, wtoric::Error);
  // rational values mix with anything
  CHECK((Scalar(3) + b) == Scalar(Rational(3), Rational(1), 5));
}

TEST_CASE("field axioms on random elements") {
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t d = (trial % 2 == 0) ? 5 : 2;
    const Scalar x = random_scalar(d), y = random_scalar(d), z = random_scalar(d);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x + Scalar(0) == x);
    CHECK(x * Scalar(1) == x);
    CHECK(x - x == Scalar(0));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Scalar(1));
      CHECK(x / x == Scalar(1));
    }
  }
}

TEST_CASE("exact sign") {
  // 7 - 3 sqrt(5) < 0 since 49 < 45 is false: 49 > 45, so positive
  CHECK(Scalar(Rational(7), Rational(-3), 5).sign() > 0);
  // 6 - 3 sqrt(5) < 0 since 36 < 45
  CHECK(Scalar(Rational(6), Rational(-3), 5).sign() < 0);
  CHECK(Scalar(0).sign() == 0);
  CHECK(Scalar::sqrt_of(5).sign() > 0);
  CHECK((-Scalar::sqrt_of(5)).sign() < 0);

  for (int trial = 0; trial < 10000; ++trial) {
    const Scalar x = random_scalar(5);
    if (x.is_zero()) continue;
    CHECK(x.sign() * (-x).sign() == -1);
    const double approx = x.to_double();
    if (std::abs(approx) > 1e-9) {
      CHECK(x.sign() == (approx > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("comparisons order the field") {
  const Scalar g(Rational(1, 2), Rational(1, 2), 5);  // golden ratio
  CHECK(g > Scalar(1));
  CHECK(g < Scalar(2));
  CHECK(Scalar(Rational(161, 100)) < g);  // 1.61 < phi
  CHECK(g < Scalar(Rational(162, 100)));
}

TEST_CASE("serialization strings") {
  CHECK(wtoric::rational_to_string(Rational(-3, 6)) == "-1/2");
  CHECK(wtoric::rational_to_string(Rational(4)) == "4/1");
  CHECK(wtoric::rational_from_string("22/7") == Rational(22, 7));
  CHECK_THROWS_AS(wtoric::rational_from_string("nope"), wtoric::Error);
}

TEST_CASE("integrality") {
  CHECK(Scalar(4).is_integer());
  CHECK(!Scalar(Rational(1, 2)).is_integer());
  CHECK(!Scalar::sqrt_of(5).is_integer());
}
