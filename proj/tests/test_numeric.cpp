#include "cayleylab/numeric.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace cayleylab;

TEST_CASE("exact ratios canonicalize on construction") {
  const ExactRatio half(BigInt(2), BigInt(4));
  CHECK(numer(half) == 1);
  CHECK(denom(half) == 2);

  const ExactRatio neg = ExactRatio(1) / ExactRatio(-2);
  CHECK(numer(neg) == -1);
  CHECK(denom(neg) == 2);
  // The component constructor demands a positive denominator; the sign
  // always lives in the numerator.
  CHECK_THROWS_AS(ExactRatio(BigInt(1), BigInt(-2)), std::domain_error);

  const ExactRatio zero(BigInt(0), BigInt(7));
  CHECK(numer(zero) == 0);
  CHECK(denom(zero) == 1);
}

TEST_CASE("rational arithmetic is exact") {
  const ExactRatio a(1, 3), b(1, 6);
  CHECK(a + b == ExactRatio(1, 2));
  CHECK(a - b == ExactRatio(1, 6));
  CHECK(a * b == ExactRatio(1, 18));
  CHECK(a / b == 2);
}

TEST_CASE("error types map to the standard hierarchy") {
  // Precondition violations are argument errors; budget and quadrature
  // failures are runtime conditions. The CLI exit-code mapping relies on
  // these bases staying distinct.
  CHECK_THROWS_AS(throw precondition_error("x"), std::invalid_argument);
  CHECK_THROWS_AS(throw feasibility_error("x"), std::runtime_error);
  CHECK_THROWS_AS(throw quadrature_error("x"), std::runtime_error);
}

TEST_CASE("log2_bigint matches std::log2 on machine-size values") {
  for (long v : {1L, 2L, 3L, 7L, 100L, 1L << 40}) {
    CHECK(std::abs(static_cast<double>(log2_bigint(BigInt(v))) -
                   std::log2(static_cast<double>(v))) < 1e-12);
  }
  CHECK_THROWS_AS(log2_bigint(BigInt(0)), precondition_error);
  CHECK_THROWS_AS(log2_bigint(BigInt(-5)), precondition_error);
}

TEST_CASE("log2_bigint handles values far beyond double range") {
  const BigInt big = BigInt(1) << 5000;  // 2^5000
  CHECK(std::abs(static_cast<double>(log2_bigint(big)) - 5000.0) < 1e-9);
  const BigInt big3 = big * 3;
  CHECK(std::abs(static_cast<double>(log2_bigint(big3)) -
                 (5000.0 + std::log2(3.0))) < 1e-9);
}

TEST_CASE("log_rational agrees with std::log and handles huge ratios") {
  CHECK(std::abs(static_cast<double>(log_rational(ExactRatio(5, 6))) -
                 std::log(5.0 / 6.0)) < 1e-14);
  // ln(2^2000 / 3^1000) = 2000 ln 2 - 1000 ln 3, both factors overflow double.
  const ExactRatio q(BigInt(1) << 2000, boost::multiprecision::pow(BigInt(3), 1000));
  const double expected = 2000 * std::log(2.0) - 1000 * std::log(3.0);
  CHECK(std::abs(static_cast<double>(log_rational(q)) - expected) < 1e-8);
  CHECK_THROWS_AS(log_rational(ExactRatio(0)), precondition_error);
  CHECK_THROWS_AS(log_rational(ExactRatio(-1, 2)), precondition_error);
}

TEST_CASE("to_long_double and to_double round-trip representable values") {
  CHECK(to_double(ExactRatio(1, 4)) == 0.25);
  CHECK(to_double(ExactRatio(-3, 8)) == -0.375);
  CHECK(to_double(ExactRatio(0)) == 0.0);
  CHECK(std::abs(to_double(ExactRatio(1, 3)) - 1.0 / 3.0) < 1e-16);
}

TEST_CASE("to_long_double is accurate when numerator and denominator are huge") {
  // (2^300 + 1) / 2^300 = 1 + 2^-300: the shift-and-divide path must keep
  // the leading digits rather than overflowing.
  const BigInt base = BigInt(1) << 300;
  CHECK(to_double(ExactRatio(base + 1, base)) == doctest::Approx(1.0).epsilon(1e-15));
  // Ratio of same-magnitude giants with a known value.
  const ExactRatio q(base * 7, base * 2);
  CHECK(to_double(q) == 3.5);
}
