#include <doctest.h>

#include <random>

#include "jconst/cyclotomic.hpp"
#include "jconst/rational.hpp"

using namespace jconst;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(3, 7) / Rational(3, 7)) == Rational(1));
  CHECK(Rational(5, 3).inverse() == Rational(3, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero())
      CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("cyclotomic polynomial degrees match the totient") {
  const unsigned totient[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4,
                              12, 6, 8, 8, 16, 6, 18, 8, 12, 10, 22, 8};
  for (unsigned m = 1; m <= 24; ++m)
    CHECK(CycField::get(m)->degree() == totient[m]);
  CHECK_THROWS_AS(CycField::get(25), Error);
  CHECK_THROWS_AS(CycField::get(0), Error);
}

TEST_CASE("zeta is a primitive m-th root of unity") {
  for (unsigned m : {1u, 2u, 3u, 4u, 6u, 8u, 12u, 24u}) {
    auto field = CycField::get(m);
    Cyc one = Cyc::from_rational(field, Rational(1));
    Cyc z = Cyc::zeta_power(field, 1);
    Cyc power = one;
    for (unsigned k = 1; k < m; ++k) {
      power = power * z;
      CHECK(power == Cyc::zeta_power(field, k));
      if (m > 1)
        CHECK(power != one); // primitive: no smaller power hits 1
    }
    CHECK(power * z == one);
  }
}

TEST_CASE("cyclotomic inverses round-trip") {
  for (unsigned m : {1u, 4u, 5u, 6u, 12u}) {
    auto field = CycField::get(m);
    Cyc one = Cyc::from_rational(field, Rational(1));
    std::mt19937_64 rng(m);
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> c(field->degree());
      for (auto &x : c)
        x = Rational(coeff(rng), 1 + (trial % 3));
      Cyc value(field, std::move(c));
      if (value.is_zero())
        continue;
      CHECK(value * value.inverse() == one);
    }
    CHECK_THROWS_AS(Cyc::from_rational(field, Rational(0)).inverse(), Error);
  }
}

TEST_CASE("sixth roots satisfy the hexagonal relation") {
  auto field = CycField::get(6);
  // zeta^2 = zeta - 1 over Q(zeta_6)
  Cyc z = Cyc::zeta_power(field, 1);
  CHECK(z * z == z - Cyc::from_rational(field, Rational(1)));
}

TEST_CASE("value parsing") {
  auto q = CycField::get(1);
  CHECK(parse_cyc(q, "3") == Cyc::from_rational(q, Rational(3)));
  CHECK(parse_cyc(q, "-1/2") == Cyc::from_rational(q, Rational(-1, 2)));
  CHECK(parse_cyc(q, "1+2") == Cyc::from_rational(q, Rational(3)));

  auto z12 = CycField::get(12);
  CHECK(parse_cyc(z12, "z") == Cyc::zeta_power(z12, 1));
  CHECK(parse_cyc(z12, "z^5") == Cyc::zeta_power(z12, 5));
  CHECK(parse_cyc(z12, "2*z^2") ==
        Cyc::zeta_power(z12, 2) * Cyc::from_rational(z12, Rational(2)));
  CHECK(parse_cyc(z12, "1 - z + 3/2*z^3") ==
        Cyc::from_rational(z12, Rational(1)) - Cyc::zeta_power(z12, 1) +
            Cyc::zeta_power(z12, 3) * Cyc::from_rational(z12, Rational(3, 2)));
  CHECK_THROWS_AS(parse_cyc(q, "oops"), Error);
  CHECK_THROWS_AS(parse_cyc(q, "1+"), Error);
}
