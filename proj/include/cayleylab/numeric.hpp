#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace cayleylab {

// Arbitrary-precision integer and canonical rational (reduced, positive
// denominator). All exact probabilities in this library are ExactRatio.
using BigInt = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

// Argument violates a documented mathematical precondition (maps to CLI
// exit code 3).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request is mathematically fine but computationally out of budget (maps
// to CLI exit code 4).
struct feasibility_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not certify the requested tolerance.
struct quadrature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigInt numer(const ExactRatio& q) { return boost::multiprecision::numerator(q); }

inline BigInt denom(const ExactRatio& q) { return boost::multiprecision::denominator(q); }

// log2 of a positive BigInt, accurate to ~1 ulp of long double.
inline long double log2_bigint(const BigInt& x) {
  if (x <= 0) throw precondition_error("log2_bigint: argument must be positive");
  long shift = static_cast<long>(boost::multiprecision::msb(x)) - 80;
  if (shift <= 0) return std::log2(x.convert_to<long double>());
  BigInt top = x >> shift;
  return static_cast<long double>(shift) + std::log2(top.convert_to<long double>());
}

// Natural log of a positive rational without overflowing either side.
inline long double log_rational(const ExactRatio& q) {
  if (q <= 0) throw precondition_error("log_rational: argument must be positive");
  constexpr long double ln2 = 0.69314718055994530942L;
  return (log2_bigint(numer(q)) - log2_bigint(denom(q))) * ln2;
}

// Rounds a rational to long double, scaling first so that numerator and
// denominator convert without silently saturating.
inline long double to_long_double(const ExactRatio& q) {
  const BigInt n = numer(q);
  const BigInt d = denom(q);
  if (n == 0) return 0.0L;
  const bool neg = n < 0;
  BigInt an = neg ? BigInt(-n) : n;
  long sn = static_cast<long>(boost::multiprecision::msb(an)) - 80;
  long sd = static_cast<long>(boost::multiprecision::msb(d)) - 80;
  if (sn > 0) an >>= sn; else sn = 0;
  BigInt ad = d;
  if (sd > 0) ad >>= sd; else sd = 0;
  long double v = an.convert_to<long double>() / ad.convert_to<long double>();
  v = std::ldexp(v, static_cast<int>(sn - sd));
  return neg ? -v : v;
}

inline double to_double(const ExactRatio& q) {
  return static_cast<double>(to_long_double(q));
}

}  // namespace cayleylab
