#include "cayleylab/combinatorics.hpp"

#include "doctest.h"

using namespace cayleylab;

TEST_CASE("binomial coefficients: exact values and edge cases") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 3) == 120);
  // Largest central coefficient still in 64-bit range.
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
  // Well past 64 bits.
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), precondition_error);
}

TEST_CASE("binomial satisfies the Pascal recurrence on a grid") {
  for (long n = 1; n <= 40; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(4, 2) == 12);
  CHECK(falling_factorial(4, 0) == 1);
  CHECK(falling_factorial(0, 0) == 1);
  CHECK(falling_factorial(3, 4) == 0);  // runs through zero
  CHECK(falling_factorial(10, 10) == 3628800);
  CHECK_THROWS_AS(falling_factorial(-1, 2), precondition_error);
  CHECK_THROWS_AS(falling_factorial(3, -1), precondition_error);
}

TEST_CASE("p(n,k,t): documented reference values") {
  CHECK(p_incl_excl(5, 2, 1) == ExactRatio(5, 6));
  CHECK(p_incl_excl(9, 3, 2) == ExactRatio(11, 14));
  // (n-1) p(n, k, floor((n-4)/12)) = 11 at n = 16, k = 8.
  CHECK(15 * p_incl_excl(16, 8, 1) == 11);
  // Larger instance frozen from an independent big-rational evaluation.
  CHECK(p_incl_excl(100, 45, 8) ==
        ExactRatio(BigInt("76276150185"), BigInt("522304286966")));
  CHECK(p_incl_excl(32, 10, 15) == ExactRatio(39424, 310155));
  // Fully blocked: k so large every pair is hit.
  CHECK(p_incl_excl(16, 10, 7) == 0);
}

TEST_CASE("p(n,k,t): degenerate parameters") {
  // No pairs to avoid, or nothing drawn: probability one.
  CHECK(p_incl_excl(10, 4, 0) == 1);
  CHECK(p_incl_excl(10, 0, 3) == 1);
  CHECK(p_incl_excl(2, 1, 0) == 1);
  // k = 1 can never contain a full pair.
  CHECK(p_incl_excl(9, 1, 4) == 1);
}

TEST_CASE("p(n,k,t): preconditions") {
  CHECK_THROWS_AS(p_incl_excl(1, 0, 0), precondition_error);
  CHECK_THROWS_AS(p_incl_excl(5, 5, 1), precondition_error);   // k > n-1
  CHECK_THROWS_AS(p_incl_excl(5, -1, 1), precondition_error);
  CHECK_THROWS_AS(p_incl_excl(5, 2, 3), precondition_error);   // 2t > n-1
  CHECK_THROWS_AS(p_incl_excl(5, 2, -1), precondition_error);
}

TEST_CASE("p(n,k,t) is a probability and decreasing in t") {
  for (long n : {6L, 11L, 17L}) {
    for (long k = 0; k <= n - 1; ++k) {
      ExactRatio prev = 1;
      for (long t = 0; 2 * t <= n - 1; ++t) {
        const ExactRatio p = p_incl_excl(n, k, t);
        CHECK(p >= 0);
        CHECK(p <= 1);
        CHECK(p <= prev);  // more pairs to avoid can only hurt
        prev = p;
      }
    }
  }
}

TEST_CASE("a(n,k,t): generating-function values") {
  CHECK(a_coeff_extract(10, 3, 2) == 104);
  CHECK(a_coeff_extract(4, 2, 2) == 4);   // (1+2y)^2, coefficient of y^2
  CHECK(a_coeff_extract(6, 3, 3) == 8);   // (1+2y)^3, coefficient of y^3
  CHECK(a_coeff_extract(7, 0, 3) == 1);
  CHECK(a_coeff_extract(5, 5, 0) == 1);
  // Vanishing region: a = 0 exactly when k + t > n.
  CHECK(a_coeff_extract(6, 4, 3) == 0);
  CHECK(a_coeff_extract(8, 7, 2) == 0);
  CHECK_THROWS_AS(a_coeff_extract(4, 2, 3), precondition_error);  // 2t > n
  CHECK_THROWS_AS(a_coeff_extract(4, 5, 1), precondition_error);  // k > n
}

TEST_CASE("a(n,k,t) agrees with exhaustive subset counting") {
  for (long n = 0; n <= 10; ++n)
    for (long t = 0; 2 * t <= n; ++t)
      for (long k = 0; k <= n; ++k)
        CHECK(a_coeff_extract(n, k, t) == a_bruteforce(n, k, t));
}

TEST_CASE("a_bruteforce enumeration guard") {
  // Only the pair itself is excluded among 2-subsets.
  CHECK(a_bruteforce(24, 2, 1) == binomial(24, 2) - 1);
  CHECK_THROWS_AS(a_bruteforce(25, 2, 1), feasibility_error);
}

TEST_CASE("closed form for the fully paired odd case a(2t+1, k, t)") {
  for (long t = 0; t <= 16; ++t)
    for (long k = 0; k <= 2 * t + 1; ++k)
      CHECK(a_abelian_closed(t, k) == a_coeff_extract(2 * t + 1, k, t));
  // The k = t+1 extreme collapses to 2^t.
  CHECK(a_abelian_closed(5, 6) == 32);
  CHECK(a_abelian_closed(0, 1) == 1);
}

TEST_CASE("p via subset counts equals p via inclusion-exclusion") {
  for (long n = 2; n <= 12; ++n)
    for (long t = 0; 2 * t <= n - 1; ++t)
      for (long k = 0; k <= n - 1; ++k)
        CHECK(p_from_a(n, k, t) == p_incl_excl(n, k, t));
  CHECK(p_from_a(100, 45, 8) == p_incl_excl(100, 45, 8));
}
