#include <doctest.h>

#include <cmath>
#include <random>

#include "srt/numbers.hpp"

using srt::CycNumber;
using srt::Rational;

namespace {

CycNumber random_cyc(std::mt19937_64& rng, int conductor) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int j = 0; j < srt::euler_phi(conductor); ++j) c.push_back(srt::make_rational(num(rng), den(rng)));
  return CycNumber::from_poly(conductor, c);
}

}  // namespace

TEST_SUITE("numbers") {
  TEST_CASE("rational arithmetic and parsing") {
    CHECK(srt::make_rational(1, 2) + srt::make_rational(1, 3) == srt::make_rational(5, 6));
    CHECK(srt::to_string(srt::parse_rational("-6/4")) == "-3/2");
    CHECK(srt::to_string(srt::parse_rational("7")) == "7");
    CHECK_THROWS_AS(srt::parse_rational("1/0"), srt::InputError);
    CHECK_THROWS_AS(srt::parse_rational("abc"), srt::InputError);
    CHECK_THROWS_AS(srt::parse_rational(""), srt::InputError);
  }

  TEST_CASE("cyclotomic relations") {
    CHECK(CycNumber::zeta(4) * CycNumber::zeta(4) == CycNumber(-1));
    const CycNumber z = CycNumber::zeta(5) + CycNumber::zeta(5, 4);
    CHECK((z * z + z - CycNumber(1)).is_zero());
    // numeric oracle: 2 cos(2 pi / 5) = (sqrt 5 - 1) / 2
    CHECK(z.to_complex().real() == doctest::Approx((std::sqrt(5.0) - 1) / 2));
    CHECK(CycNumber::zeta(5).galois(2) == CycNumber::zeta(5, 2));
  }

  TEST_CASE("is_rational") {
    const CycNumber i = CycNumber::zeta(4);
    REQUIRE((i * i + CycNumber(1)).to_rational());
    CHECK(*(i * i + CycNumber(1)).to_rational() == 0);
    CHECK_FALSE(CycNumber::zeta(3).to_rational());
    const CycNumber root2 = CycNumber::zeta(8) + CycNumber::zeta(8, 7);
    CHECK_FALSE(root2.to_rational());
    CHECK(root2 * root2 == CycNumber(2));
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const CycNumber a = random_cyc(rng, 12), b = random_cyc(rng, 12), c = random_cyc(rng, 15);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber(1));
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("embedding commutes with arithmetic") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const CycNumber a = random_cyc(rng, 4), b = random_cyc(rng, 4);
      CHECK((a * b).embed(12) == a.embed(12) * b.embed(12));
      CHECK((a + b).embed(24) == a.embed(24) + b.embed(24));
      CHECK(a.embed(12) == a);
    }
  }

  TEST_CASE("complex embedding agrees with numerics") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const CycNumber a = random_cyc(rng, 7), b = random_cyc(rng, 9);
      const auto exact = (a * b).to_complex();
      const auto approx = a.to_complex() * b.to_complex();
      CHECK(std::abs(exact - approx) < 1e-9 * (1 + std::abs(approx)));
    }
  }
}
