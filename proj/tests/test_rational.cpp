#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "exproj/rational.hpp"

using namespace exproj;

TEST_CASE("isqrt on small inputs") {
  CHECK(isqrt(BigInt(0)) == 0);
  CHECK(isqrt(BigInt(16)) == 4);
  CHECK(isqrt(BigInt(17)) == 4);  // 4^2 = 16 <= 17 < 25
  CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("isqrt bracketing holds on the full small range") {
  for (long long x = 0; x <= 1000000; ++x) {
    const BigInt r = isqrt(BigInt(x));
    REQUIRE(r * r <= x);
    REQUIRE((r + 1) * (r + 1) > x);
  }
}

TEST_CASE("floor_half_diff examples") {
  CHECK(floor_half_diff(BigInt(3), BigInt(5)) == 0);    // (3 - sqrt 5)/2 ~ 0.38
  CHECK(floor_half_diff(BigInt(1), BigInt(5)) == -1);   // (1 - sqrt 5)/2 ~ -0.62
  CHECK(floor_half_diff(BigInt(4), BigInt(16)) == 0);   // exact at a perfect square
  CHECK_THROWS_AS(floor_half_diff(BigInt(1), BigInt(-2)), std::domain_error);
}

TEST_CASE("floor_half_diff agrees with a float reference away from integers") {
  // Near-integer float values fall back to the exact two-sided bracket
  // 2v <= K - sqrt(D) < 2v + 2 checked in integer arithmetic.
  for (long long k = -200; k <= 200; ++k) {
    for (long long d = 0; d <= 40000; ++d) {
      const BigInt v = floor_half_diff(BigInt(k), BigInt(d));
      const long double value = (static_cast<long double>(k) - sqrtl(static_cast<long double>(d))) / 2.0L;
      const long double nearest = roundl(value);
      if (fabsl(value - nearest) >= 1e-6L) {
        REQUIRE(v == BigInt(static_cast<long long>(floorl(value))));
      } else {
        const long long vi = v.convert_to<long long>();
        // lower side: 2v <= K - sqrt(D)  <=>  (K - 2v)^2 >= D with K - 2v >= 0
        const BigInt lo = BigInt(k) - 2 * vi;
        REQUIRE(lo >= 0);
        REQUIRE(lo * lo >= d);
        if (!is_perfect_square(BigInt(d))) REQUIRE(lo * lo > d);
        // upper side: K - sqrt(D) < 2v + 2  <=>  (K - 2v - 2)^2 < D or K - 2v - 2 < 0
        const BigInt hi = lo - 2;
        REQUIRE((hi < 0 || hi * hi < d));
      }
    }
  }
}

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(parse_rational("3/6")) == "1/2");
  CHECK(format_rational(parse_rational("-4/2")) == "-2");
  CHECK(format_rational(parse_rational("7")) == "7");
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is canonical and well ordered") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    // canonical form: positive denominator, reduced
    const Rational sum_ab = a + b;
    const Rational prod_ab = a * b;
    CHECK(denominator(sum_ab) > 0);
    CHECK(boost::multiprecision::gcd(BigInt(abs(numerator(prod_ab))), BigInt(denominator(prod_ab))) <= 1);
    // order consistent with cross-multiplication
    const bool lt = a < b;
    CHECK(lt == (numerator(a) * denominator(b) < numerator(b) * denominator(a)));
  }
}

TEST_CASE("floor and ceil of rationals") {
  CHECK(floor_rat(Rational(7, 2)) == 3);
  CHECK(floor_rat(Rational(-7, 2)) == -4);
  CHECK(ceil_rat(Rational(7, 2)) == 4);
  CHECK(ceil_rat(Rational(-7, 2)) == -3);
  CHECK(floor_rat(Rational(4)) == 4);
  CHECK(ceil_rat(Rational(4)) == 4);
}
