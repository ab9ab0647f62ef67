#include "nndisp/exact_error.hpp"

#include <cmath>

#include "nndisp/analytics.hpp"
#include "nndisp/error.hpp"
#include "nndisp/special.hpp"

namespace nndisp::exact_error {

namespace {

void check_powers(const EmpiricalPowers& ep, bool need_py_positive) {
  if (!(ep.power > 0.0) || !std::isfinite(ep.power))
    throw_domain("code power must be positive and finite");
  if (!(ep.p_y_hat >= 0.0) || !std::isfinite(ep.p_y_hat))
    throw_domain("empirical output power must be nonnegative and finite");
  if (need_py_positive && ep.p_y_hat == 0.0)
    throw_domain("empirical output power must be positive");
  if (!(ep.p_z_hat >= 0.0) || !std::isfinite(ep.p_z_hat))
    throw_domain("empirical distance power must be nonnegative and finite");
  if (ep.n < 1) throw_domain("blocklength must be at least 1");
}

}  // namespace

double shell_tail(double t, std::int64_t n, double power) {
  if (n < 2) throw_domain("shell tail requires blocklength n >= 2");
  if (!(power > 0.0) || !std::isfinite(power))
    throw_domain("code power must be positive and finite");
  if (std::isnan(t)) throw_domain("shell tail threshold is NaN");
  const double radius = std::sqrt(static_cast<double>(n) * power);
  if (t <= -radius) return 1.0;
  if (t >= radius) return 0.0;
  const double a = 0.5 * (static_cast<double>(n) - 1.0);
  const double x = 0.5 * (1.0 - t / radius);
  return special::reg_incomplete_beta(a, a, x);
}

double psi_shell(const EmpiricalPowers& ep) {
  check_powers(ep, /*need_py_positive=*/true);
  const double n = static_cast<double>(ep.n);
  const double threshold = std::sqrt(n) * (ep.p_y_hat + ep.power - ep.p_z_hat) /
                           (2.0 * std::sqrt(ep.p_y_hat));
  return shell_tail(threshold, ep.n, ep.power);
}

double psi_iid(const EmpiricalPowers& ep) {
  check_powers(ep, /*need_py_positive=*/false);
  const double n = static_cast<double>(ep.n);
  return special::noncentral_chi2_cdf(n * ep.p_z_hat / ep.power, n,
                                      n * ep.p_y_hat / ep.power);
}

double conditional_error(double psi, std::int64_t m) {
  if (!(psi >= 0.0) || !(psi <= 1.0))
    throw_domain("competitor probability must lie in [0, 1]");
  if (m < 1) throw_domain("codebook size must be at least 1");
  if (m == 1 || psi == 0.0) return 0.0;
  if (psi == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(m - 1) * std::log1p(-psi));
}

double conditional_error_log_m(double psi, double log_m) {
  if (!(psi >= 0.0) || !(psi <= 1.0))
    throw_domain("competitor probability must lie in [0, 1]");
  if (!(log_m >= 0.0) || !std::isfinite(log_m))
    throw_domain("log codebook size must be nonnegative and finite");
  if (log_m == 0.0 || psi == 0.0) return 0.0;
  if (psi == 1.0) return 1.0;
  const double a = std::log1p(-psi);  // < 0
  double t;
  if (log_m < 700.0) {
    t = std::expm1(log_m) * a;
  } else {
    // M - 1 ~ e^{log_m}; form the product in the log domain.
    t = -std::exp(log_m + std::log(-a));
  }
  return -std::expm1(t);
}

ExponentResult ld_exponent(const EmpiricalPowers& ep) {
  check_powers(ep, /*need_py_positive=*/false);
  if (ep.p_z_hat == 0.0)
    throw_domain("exponent undefined at zero empirical distance power");
  const double P = ep.power;
  const double py = ep.p_y_hat;
  const double pz = ep.p_z_hat;
  double s = (P - 2.0 * pz + std::sqrt(P * P + 4.0 * py * pz)) / (4.0 * pz);
  if (s < 0.0) s = 0.0;
  const double value =
      py * s / (P * (1.0 + 2.0 * s)) + 0.5 * std::log1p(2.0 * s) - s * pz / P;
  return {s, value};
}

double exponent_taylor_ref(const EmpiricalPowers& ep) {
  check_powers(ep, /*need_py_positive=*/false);
  return analytics::capacity(ep.power) + ep.p_y_hat / (2.0 * (ep.power + 1.0)) -
         0.5 * ep.p_z_hat;
}

double shell_log_psi_exponent(const EmpiricalPowers& ep) {
  check_powers(ep, /*need_py_positive=*/true);
  const double g = ep.p_y_hat + ep.power - ep.p_z_hat;
  const double arg = 1.0 - g * g / (4.0 * ep.power * ep.p_y_hat);
  if (!(arg > 0.0))
    throw_domain("shell exponent undefined: empirical powers outside the shell support");
  return -0.5 * std::log(arg);
}

}  // namespace nndisp::exact_error
