#include "cayleylab/asymptotics.hpp"

#include "cayleylab/combinatorics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace cayleylab {

namespace {
constexpr long double kPi = std::numbers::pi_v<long double>;

void check_open_unit(const char* who, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw precondition_error(std::string(who) + ": need 0 < lambda < 1, got " +
                             std::to_string(lambda));
}
}  // namespace

double binom_rate(double lambda) {
  check_open_unit("binom_rate", lambda);
  return -lambda * std::log(lambda) - (1.0 - lambda) * std::log(1.0 - lambda);
}

double binom_leading(double lambda) {
  check_open_unit("binom_leading", lambda);
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * lambda * (1.0 - lambda));
}

ExactRatio b_exact(long t, long k) {
  if (t < 0 || k < 0 || k > t)
    throw precondition_error("b_exact: need 0 <= k <= t, got t=" + std::to_string(t) +
                             ", k=" + std::to_string(k));
  return ExactRatio((BigInt(1) << k) * binomial(t, k), binomial(2 * t, k));
}

double b_rate(double lambda) {
  check_open_unit("b_rate", lambda);
  return (2.0 - lambda) * std::log1p(-lambda / 2.0) - (1.0 - lambda) * std::log1p(-lambda);
}

double b_leading(double lambda) {
  check_open_unit("b_leading", lambda);
  return std::sqrt((2.0 - lambda) / (2.0 - 2.0 * lambda));
}

ExactRatio c_factor(long t, long k) {
  if (t < 0 || k < 0 || k > t)
    throw precondition_error("c_factor: need 0 <= k <= t, got t=" + std::to_string(t) +
                             ", k=" + std::to_string(k));
  return ExactRatio(BigInt(2 * t - k + 2) * (2 * t + 1 - k),
                    BigInt(2 * t - 2 * k + 2) * (2 * t + 1));
}

long double saddle_r(long double d1, long double d2, long double d3) {
  if (!(d1 > 0 && d2 > 0 && d3 > 0))
    throw precondition_error("saddle_r: need d1, d2, d3 > 0");
  if (std::abs(d1 + 2 * d2 - 1.0L) > 1e-9L)
    throw precondition_error("saddle_r: need d1 + 2 d2 = 1");
  if (!(d1 + d2 > d3))
    throw precondition_error("saddle_r: need d1 + d2 > d3 (saddle diverges at k + t = n)");
  const long double disc = (1 - 3 * d3) * (1 - 3 * d3) + 8 * d3 * (d1 + d2 - d3);
  if (disc < 0) throw precondition_error("saddle_r: negative discriminant");
  return 2 * d3 / ((1 - 3 * d3) + std::sqrt(disc));
}

long double saddle_residual(long double r, long double d1, long double d2, long double d3) {
  return d3 - d1 * r / (1 + r) - 2 * d2 * r / (1 + 2 * r);
}

SaddleParams saddle_params(long n, long k, long t) {
  if (n < 1 || k < 1 || t < 1 || k > n || 2 * t > n || k + t >= n)
    throw precondition_error("saddle_params: need 1 <= k, 1 <= t, 2t <= n, k + t < n");
  SaddleParams sp;
  sp.d1 = static_cast<long double>(n - 2 * t) / n;
  sp.d2 = static_cast<long double>(t) / n;
  sp.d3 = static_cast<long double>(k) / n;
  sp.r = saddle_r(sp.d1, sp.d2, sp.d3);
  return sp;
}

long double E_factor(long double r, long n, long k, long t) {
  if (!(r > 0)) throw precondition_error("E_factor: need r > 0");
  return -static_cast<long double>(k) * std::log(r) +
         static_cast<long double>(n - 2 * t) * std::log1p(r) +
         static_cast<long double>(t) * std::log1p(2 * r);
}

long double E_rate(long double r, long double d1, long double d2, long double d3) {
  if (!(r > 0)) throw precondition_error("E_rate: need r > 0");
  return -d3 * std::log(r) + d1 * std::log1p(r) + d2 * std::log1p(2 * r);
}

std::complex<long double> phase_F(long double theta, long double r, long double d1,
                                  long double d2, long double d3) {
  if (!(r > 0)) throw precondition_error("phase_F: need r > 0");
  if (std::abs(theta) > kPi + 1e-15L) throw precondition_error("phase_F: need |theta| <= pi");
  const std::complex<long double> eith{std::cos(theta), std::sin(theta)};
  const std::complex<long double> one{1, 0};
  return std::complex<long double>{0, d3 * theta} -
         d1 * std::log((one + r * eith) / (1 + r)) -
         d2 * std::log((one + 2 * r * eith) / (1 + 2 * r));
}

long double F_second_deriv_at_0(long double r, long double d1, long double d2) {
  if (!(r > 0)) throw precondition_error("F_second_deriv_at_0: need r > 0");
  return d1 * r / ((1 + r) * (1 + r)) + 2 * d2 * r / ((1 + 2 * r) * (1 + 2 * r));
}

std::complex<double> I_numeric(long double r, long n, long k, long t) {
  if (!(r > 0)) throw precondition_error("I_numeric: need r > 0");
  if (n < 1 || k < 0 || k > n || t < 0 || 2 * t > n)
    throw precondition_error("I_numeric: inadmissible (n,k,t)");
  if (n > 400)
    throw feasibility_error("I_numeric: guarded to n <= 400, got n=" + std::to_string(n));
  const long double d1 = static_cast<long double>(n - 2 * t) / n;
  const long double d2 = static_cast<long double>(t) / n;
  const long double d3 = static_cast<long double>(k) / n;
  const auto integrand = [&](long double theta) {
    return std::exp(-static_cast<long double>(n) * phase_F(theta, r, d1, d2, d3));
  };
  using rule = boost::math::quadrature::gauss_kronrod<long double, 61>;
  long double err_re = 0, err_im = 0;
  const long double re = rule::integrate([&](long double th) { return integrand(th).real(); },
                                         -kPi, kPi, 15, 1e-12L, &err_re);
  const long double im = rule::integrate([&](long double th) { return integrand(th).imag(); },
                                         -kPi, kPi, 15, 1e-12L, &err_im);
  const long double magnitude = std::hypot(re, im);
  const long double achieved = err_re + err_im;
  if (achieved > std::max(1e-12L, 1e-10L * magnitude))
    throw quadrature_error("I_numeric: quadrature converged only to " +
                           std::to_string(static_cast<double>(achieved)));
  return {static_cast<double>(re), static_cast<double>(im)};
}

double laplace_approx(double f_second, double g0, long n, std::complex<double> f0) {
  if (!(f_second > 0)) throw precondition_error("laplace_approx: need f_second > 0");
  if (n < 1) throw precondition_error("laplace_approx: need n >= 1");
  const std::complex<double> amplitude = std::exp(static_cast<double>(n) * f0);
  return (amplitude * g0 * std::sqrt(2.0 * std::numbers::pi / (n * f_second))).real();
}

long double a_saddle_estimate(long n, long k, long t) {
  const SaddleParams sp = saddle_params(n, k, t);
  const std::complex<double> integral = I_numeric(sp.r, n, k, t);
  return std::exp(E_factor(sp.r, n, k, t)) * static_cast<long double>(integral.real()) /
         (2 * kPi);
}

double saddle_r_linear(double c) {
  if (!(c > 0 && c < 11.0 / 12.0))
    throw precondition_error("saddle_r_linear: need 0 < c < 11/12");
  const double disc = (1 - 3 * c) * (1 - 3 * c) + 8 * c * (11.0 / 12.0 - c);
  return 2 * c / ((1 - 3 * c) + std::sqrt(disc));
}

double exp_rate_linear(double c) {
  const double rc = saddle_r_linear(c);
  return c * std::log(c) + (1 - c) * std::log1p(-c) - c * std::log(rc) +
         (5.0 / 6.0) * std::log1p(rc) + (1.0 / 12.0) * std::log1p(2 * rc);
}

double exp_rate_sublinear(double d2, double d3) {
  if (!(d3 > 0 && d3 <= 0.15))
    throw precondition_error("exp_rate_sublinear: need 0 < d3 <= 0.15");
  if (!(d2 > 0 && d2 < 0.25))
    throw precondition_error("exp_rate_sublinear: need 0 < d2 < 0.25");
  const long double r = saddle_r(1 - 2 * static_cast<long double>(d2), d2, d3);
  return static_cast<double>(d3 * std::log(static_cast<long double>(d3)) +
                             (1 - d3) * std::log1p(static_cast<long double>(-d3)) -
                             d3 * std::log(r) + (1 - 2 * d2) * std::log1p(r) +
                             d2 * std::log1p(2 * r));
}

double sublinear_asymptote(double d3) { return -d3 * d3 / 12.0; }

double abelian_sqrt_limit(double c) {
  if (!(c > 0)) throw precondition_error("abelian_sqrt_limit: need c > 0");
  return std::exp(-c * c / 2.0);
}

double threshold_k(long t, bool refined) {
  if (t < 2) throw precondition_error("threshold_k: need t >= 2, got t=" + std::to_string(t));
  const double inner = t * std::log(static_cast<double>(t)) + (refined ? std::log(2.0) : 0.0);
  return 2.0 * std::sqrt(inner);
}

std::vector<ThresholdRow> threshold_scan(long t_min, long t_max, double scale, bool refined) {
  if (t_min < 2 || t_min > t_max)
    throw precondition_error("threshold_scan: need 2 <= t_min <= t_max");
  if (!(scale > 0)) throw precondition_error("threshold_scan: need scale > 0");
  std::vector<ThresholdRow> rows;
  for (long t = t_min; t <= t_max; t *= 2) {
    const long k = static_cast<long>(std::ceil(scale * threshold_k(t, refined)));
    if (k < 0 || k > t)
      throw precondition_error("threshold_scan: scaled k falls outside [0, t] at t=" +
                               std::to_string(t));
    const ExactRatio upper = ExactRatio(2 * t + 1) * b_exact(t, k) * c_factor(t, k);
    rows.push_back({t, k, to_double(upper)});
    if (t > t_max / 2) break;  // avoid overflow on t *= 2
  }
  return rows;
}

}  // namespace cayleylab
