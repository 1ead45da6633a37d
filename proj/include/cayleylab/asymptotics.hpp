#pragma once

#include "cayleylab/numeric.hpp"

#include <complex>
#include <vector>

namespace cayleylab {

// ---- Stirling-type rate functions (natural logs throughout) ----

// Binary entropy R(lambda) = -lambda ln lambda - (1-lambda) ln(1-lambda):
// ln C(n, lambda n) = n R(lambda) + O(ln n). Requires 0 < lambda < 1.
double binom_rate(double lambda);
// Companion prefactor (2 pi lambda (1-lambda))^{-1/2}:
// C(n, lambda n) ~ binom_leading(lambda) n^{-1/2} exp(n R(lambda)).
double binom_leading(double lambda);

// b(t,k) = 2^k C(t,k) / C(2t,k), exact. Requires 0 <= k <= t.
ExactRatio b_exact(long t, long k);
// Exponential rate of b at lambda = k/t:
//   (2 - lambda) ln(1 - lambda/2) - (1 - lambda) ln(1 - lambda).
double b_rate(double lambda);
// Prefactor P(lambda) = sqrt((2 - lambda) / (2 - 2 lambda)):
// b(t, lambda t) ~ b_leading(lambda) exp(t b_rate(lambda)).
double b_leading(double lambda);

// c(t,k) = (2t-k+2)(2t+1-k) / ((2t-2k+2)(2t+1)), exact; satisfies
// b_exact(t,k) * c_factor(t,k) = p(2t+2, k, t). Requires 0 <= k <= t
// (k = t+1 would need separate handling and is excluded).
ExactRatio c_factor(long t, long k);

// ---- Saddle-point machinery for a(n,k,t) = (2 pi)^{-1} E(r) I(r) ----

// Positive radius making theta = 0 a stationary point of the phase:
//   r = 2 d3 / ((1 - 3 d3) + sqrt((1 - 3 d3)^2 + 8 d3 (d1 + d2 - d3))).
// Requires d1, d2, d3 > 0, d1 + 2 d2 = 1, and d1 + d2 > d3 (i.e. k + t < n;
// at the boundary the saddle escapes to infinity).
long double saddle_r(long double d1, long double d2, long double d3);

// Stationarity residual d3 - d1 r/(1+r) - 2 d2 r/(1+2r); the first
// derivative of F at 0 is i times this value.
long double saddle_residual(long double r, long double d1, long double d2, long double d3);

struct SaddleParams {
  long double d1 = 0;  // (n - 2t) / n
  long double d2 = 0;  // t / n
  long double d3 = 0;  // k / n
  long double r = 0;   // saddle radius
};

// Builds the scaled parameters and the saddle radius for integer (n,k,t).
SaddleParams saddle_params(long n, long k, long t);

// ln E(r; n,k,t) with E = r^{-k} (1+r)^{n-2t} (1+2r)^t. Requires r > 0.
long double E_factor(long double r, long n, long k, long t);
// The same exponent per unit n: -d3 ln r + d1 ln(1+r) + d2 ln(1+2r).
long double E_rate(long double r, long double d1, long double d2, long double d3);

// Phase term (principal-branch logarithms):
//   F(theta) = i d3 theta - d1 ln((1+r e^{i theta})/(1+r))
//                        - d2 ln((1+2r e^{i theta})/(1+2r)).
// Requires |theta| <= pi, r > 0.
std::complex<long double> phase_F(long double theta, long double r, long double d1,
                                  long double d2, long double d3);

// Closed form F''(0) = d1 r/(1+r)^2 + 2 d2 r/(1+2r)^2 (real and positive).
long double F_second_deriv_at_0(long double r, long double d1, long double d2);

// Adaptive Gauss-Kronrod quadrature of I(r) = integral of exp(-n F(theta))
// over [-pi, pi]. The imaginary part must vanish to rounding; tolerance
// targets are 1e-12 absolute / 1e-10 relative (quadrature_error when the
// error estimate misses them). Guarded to n <= 400 so E fits long double.
std::complex<double> I_numeric(long double r, long n, long k, long t);

// Leading-order Laplace approximation of I = integral exp(n f) g at an
// interior maximum: exp(n f0) g0 sqrt(2 pi / (n f_second)), with f_second
// the (positive) curvature -f''. Requires f_second > 0, n >= 1.
double laplace_approx(double f_second, double g0, long n, std::complex<double> f0);

// Convenience: full saddle-point estimate of a(n,k,t) via quadrature,
// (2 pi)^{-1} exp(ln E) Re I. Same guards as I_numeric.
long double a_saddle_estimate(long n, long k, long t);

// ---- Regime rates ----

// Exponential rate of p(n, floor(c n), floor((n-4)/12)) in the linear
// regime k = c n, with the saddle radius at (d1,d2,d3) = (5/6, 1/12, c):
//   c ln c + (1-c) ln(1-c) - c ln r_c + (5/6) ln(1+r_c) + (1/12) ln(1+2r_c).
// Requires 0 < c < 11/12.
double exp_rate_linear(double c);
// The radius r_c used above.
double saddle_r_linear(double c);

// Rate in the sublinear regime k = n^alpha (d3 = k/n -> 0, d2 ~ 1/12):
//   d3 ln d3 + (1-d3) ln(1-d3) - d3 ln r + (1-2d2) ln(1+r) + d2 ln(1+2r).
// Requires 0 < d3 <= 0.15 and 0 < d2 < 0.25.
double exp_rate_sublinear(double d2, double d3);
// Small-d3 asymptote of the sublinear rate: -d3^2 / 12.
double sublinear_asymptote(double d3);

// Limit of the abelian lower-bound factor b(t,k) c(t,k) when k = c sqrt(n):
// exp(-c^2/2). Requires c > 0.
double abelian_sqrt_limit(double c);

// Threshold growth k*(t) = 2 sqrt(t ln t), or the refined
// 2 sqrt(t ln t + ln 2). Requires t >= 2.
double threshold_k(long t, bool refined = false);

// One row of the threshold scan: the abelian-style upper bound
// (2t+1) b(t,k) c(t,k) evaluated at k = ceil(threshold_k(t) * scale).
struct ThresholdRow {
  long t = 0;
  long k = 0;
  double upper = 0.0;
};
// Scan over t = powers of two in [t_min, t_max]. Requires 2 <= t_min <= t_max.
std::vector<ThresholdRow> threshold_scan(long t_min, long t_max, double scale = 1.0,
                                         bool refined = false);

}  // namespace cayleylab
