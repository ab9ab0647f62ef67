#include "nndisp/analytics.hpp"

#include <cmath>

#include "nndisp/error.hpp"
#include "nndisp/special.hpp"

namespace nndisp::analytics {

namespace {

void check_power(double power) {
  if (!(power >= 0.0) || !std::isfinite(power))
    throw_domain("power must be nonnegative and finite");
}

void check_xi(double xi) {
  if (!(xi >= 1.0) || !std::isfinite(xi))
    throw_domain("kurtosis must satisfy xi >= 1 (Jensen bound at unit power)");
}

void check_interferers(std::span<const double> powers) {
  for (double p : powers)
    if (!(p > 0.0) || !std::isfinite(p))
      throw_domain("interferer powers must be positive and finite");
}

}  // namespace

long double gaussian_q(double x) { return special::normal_upper_tail(x); }

double gaussian_q_inv(double p) { return special::normal_upper_quantile(p); }

double capacity(double power) {
  check_power(power);
  return 0.5 * std::log1p(power);
}

double v_gauss(double power) {
  check_power(power);
  const double p1 = power + 1.0;
  return power * (power + 2.0) / (2.0 * p1 * p1);
}

double v_shell(double power, double xi) {
  check_power(power);
  check_xi(xi);
  const double p1 = power + 1.0;
  return (power * power * (xi - 1.0) + 4.0 * power) / (4.0 * p1 * p1);
}

double v_iid(double power, double xi) {
  check_power(power);
  check_xi(xi);
  const double p1 = power + 1.0;
  return (power * power * (xi + 1.0) + 4.0 * power) / (4.0 * p1 * p1);
}

Sinr sinr(double p1, std::span<const double> interferer_powers) {
  if (!(p1 > 0.0) || !std::isfinite(p1))
    throw_domain("intended power must be positive and finite");
  check_interferers(interferer_powers);
  double p_tilde = 0.0;
  for (double p : interferer_powers) p_tilde += p;
  return {p1 / (1.0 + p_tilde), p_tilde};
}

double xi_prime(double xi, double p_tilde) {
  check_xi(xi);
  if (!(p_tilde >= 0.0) || !std::isfinite(p_tilde))
    throw_domain("total interferer power must be nonnegative");
  const double t1 = p_tilde + 1.0;
  return (3.0 * p_tilde * p_tilde + 6.0 * p_tilde + xi) / (t1 * t1);
}

double v_shell_interference(double p1, std::span<const double> interferer_powers,
                            double xi) {
  if (!(p1 > 0.0) || !std::isfinite(p1))
    throw_domain("intended power must be positive and finite");
  check_xi(xi);
  check_interferers(interferer_powers);
  double p_tilde = 0.0, sum_sq = 0.0;
  for (double p : interferer_powers) {
    p_tilde += p;
    sum_sq += p * p;
  }
  const double pair_sum = 0.5 * (p_tilde * p_tilde - sum_sq);
  const double t1 = p_tilde + 1.0;
  const double s1 = p1 + p_tilde + 1.0;
  const double num = p1 * p1 * (xi - 1.0 + 4.0 * p_tilde) + 4.0 * p1 * t1 * t1 * t1 +
                     4.0 * p1 * p1 * pair_sum;
  return num / (4.0 * t1 * t1 * s1 * s1);
}

double info_density(double x, double y, double power) {
  const double d = y - x;
  return capacity(power) + y * y / (2.0 * (power + 1.0)) - 0.5 * d * d;
}

double info_density_sum(std::span<const double> x, std::span<const double> y,
                        double power) {
  if (x.size() != y.size())
    throw_domain("information density inputs must have equal length");
  const double cap = capacity(power);
  const double inv = 1.0 / (2.0 * (power + 1.0));
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = y[i] - x[i];
    acc += y[i] * y[i] * inv - 0.5 * d * d;
  }
  return static_cast<double>(x.size()) * cap + acc;
}

double normal_approx_log_m(std::int64_t n, double eps, double capacity_nats,
                           double dispersion) {
  if (n < 1) throw_domain("blocklength must be at least 1");
  if (!(eps > 0.0) || !(eps < 1.0))
    throw_domain("target error probability must lie strictly inside (0, 1)");
  if (!(dispersion >= 0.0) || !std::isfinite(dispersion))
    throw_domain("dispersion must be nonnegative and finite");
  const double nd = static_cast<double>(n);
  return nd * capacity_nats - std::sqrt(nd * dispersion) * gaussian_q_inv(eps);
}

DispersionReport dispersion_report(CodebookKind intended, CodebookKind interferers,
                                   double p1,
                                   std::span<const double> interferer_powers,
                                   double xi, std::int64_t n, double eps) {
  const Sinr s = sinr(p1, interferer_powers);
  const double xi_eff = xi_prime(xi, s.p_tilde);

  double dispersion;
  if (intended == CodebookKind::Shell && interferers == CodebookKind::Shell) {
    dispersion = v_shell_interference(p1, interferer_powers, xi);
  } else if (intended == CodebookKind::Shell) {
    dispersion = v_shell(s.p_bar, xi_eff);
  } else if (interferers == CodebookKind::IidGaussian || interferer_powers.empty()) {
    dispersion = v_iid(s.p_bar, xi_eff);
  } else {
    throw_domain(
        "no closed-form dispersion for an i.i.d. sender facing shell interferers");
  }

  DispersionReport r;
  r.intended_codebook = intended == CodebookKind::Shell ? "shell" : "iid";
  r.interferer_codebook = interferers == CodebookKind::Shell ? "shell" : "iid";
  r.power = p1;
  r.p_bar = s.p_bar;
  r.p_tilde = s.p_tilde;
  r.capacity = capacity(s.p_bar);
  r.dispersion = dispersion;
  r.xi = xi;
  r.xi_effective = xi_eff;
  r.n = n;
  r.eps = eps;
  r.log_m = normal_approx_log_m(n, eps, r.capacity, dispersion);
  r.rate = r.log_m / static_cast<double>(n);
  return r;
}

}  // namespace nndisp::analytics
