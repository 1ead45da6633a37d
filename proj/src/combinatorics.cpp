#include "cayleylab/combinatorics.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace cayleylab {

namespace {

std::string triple(long n, long k, long t) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
         ", t=" + std::to_string(t) + ")";
}

void check_p_args(const char* who, long n, long k, long t) {
  if (n < 2) throw precondition_error(std::string(who) + ": need n >= 2, got " + triple(n, k, t));
  if (k < 0 || k > n - 1)
    throw precondition_error(std::string(who) + ": need 0 <= k <= n-1, got " + triple(n, k, t));
  if (t < 0 || 2 * t > n - 1)
    throw precondition_error(std::string(who) + ": need 0 <= 2t <= n-1, got " + triple(n, k, t));
}

void check_a_args(const char* who, long n, long k, long t) {
  if (n < 0) throw precondition_error(std::string(who) + ": need n >= 0, got " + triple(n, k, t));
  if (k < 0 || k > n)
    throw precondition_error(std::string(who) + ": need 0 <= k <= n, got " + triple(n, k, t));
  if (t < 0 || 2 * t > n)
    throw precondition_error(std::string(who) + ": need 0 <= 2t <= n, got " + triple(n, k, t));
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw precondition_error("binomial: need n >= 0, got n=" + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;  // exact: acc is C(n-k+i, i) after this step
  }
  return acc;
}

BigInt falling_factorial(long r, long l) {
  if (r < 0 || l < 0)
    throw precondition_error("falling_factorial: need r, l >= 0, got r=" +
                             std::to_string(r) + ", l=" + std::to_string(l));
  BigInt acc = 1;
  for (long i = 0; i < l; ++i) {
    if (r - i <= 0) return 0;
    acc *= r - i;
  }
  return acc;
}

ExactRatio p_incl_excl(long n, long k, long t) {
  check_p_args("p_incl_excl", n, k, t);
  // Maintain C(t,i), (k)_{2i} and (n-1)_{2i} incrementally.
  BigInt choose = 1;   // C(t, i)
  BigInt fall_k = 1;   // (k)_{2i}
  BigInt fall_n = 1;   // (n-1)_{2i}
  ExactRatio sum = 0;
  for (long i = 0; i <= t; ++i) {
    if (i > 0) {
      choose *= t - i + 1;
      choose /= i;
      fall_k *= k - (2 * i - 2);
      fall_k *= k - (2 * i - 1);
      fall_n *= (n - 1) - (2 * i - 2);
      fall_n *= (n - 1) - (2 * i - 1);
      if (fall_k == 0) break;  // remaining terms all vanish
    }
    ExactRatio term(choose * fall_k, fall_n);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

BigInt a_coeff_extract(long n, long k, long t) {
  check_a_args("a_coeff_extract", n, k, t);
  const long m = n - 2 * t;
  // Maintain C(t,j), 2^j and C(m, k-j) incrementally over j.
  BigInt choose_t = 1;           // C(t, j)
  BigInt pow2 = 1;               // 2^j
  BigInt choose_m = binomial(m, k);  // C(m, k-j)
  BigInt sum = 0;
  const long jmax = std::min(t, k);
  for (long j = 0; j <= jmax; ++j) {
    if (j > 0) {
      choose_t *= t - j + 1;
      choose_t /= j;
      pow2 <<= 1;
      // C(m, k-j) = C(m, k-j+1) * (k-j+1) / (m-k+j)
      if (m - k + j <= 0) {
        choose_m = binomial(m, k - j);
      } else {
        choose_m *= k - j + 1;
        choose_m /= m - k + j;
      }
    }
    sum += choose_t * pow2 * choose_m;
  }
  return sum;
}

BigInt a_abelian_closed(long t, long k) {
  if (t < 0 || k < 0 || k > 2 * t + 1)
    throw precondition_error("a_abelian_closed: need t >= 0 and 0 <= k <= 2t+1, got t=" +
                             std::to_string(t) + ", k=" + std::to_string(k));
  BigInt first = (BigInt(1) << k) * binomial(t, k);
  BigInt second = k >= 1 ? BigInt((BigInt(1) << (k - 1)) * binomial(t, k - 1)) : BigInt(0);
  return first + second;
}

BigInt a_bruteforce(long n, long k, long t) {
  check_a_args("a_bruteforce", n, k, t);
  if (n > 24)
    throw feasibility_error("a_bruteforce: subset enumeration capped at n <= 24, got n=" +
                            std::to_string(n));
  if (k == 0) return 1;
  // Pairs are {0,1}, {2,3}, ..., {2t-2, 2t-1}; a subset is counted when it
  // contains no pair entirely. Iterate k-subsets with Gosper's hack.
  const std::uint32_t limit = std::uint32_t(1) << n;
  std::uint32_t mask = (std::uint32_t(1) << k) - 1;
  BigInt count = 0;
  while (mask < limit) {
    bool ok = true;
    for (long i = 0; i < t; ++i) {
      const std::uint32_t pair = std::uint32_t(0b11) << (2 * i);
      if ((mask & pair) == pair) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    // next k-combination in colex order
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return count;
}

ExactRatio p_from_a(long n, long k, long t) {
  check_p_args("p_from_a", n, k, t);
  return ExactRatio(a_coeff_extract(n - 1, k, t), binomial(n - 1, k));
}

}  // namespace cayleylab
