#ifndef NNDISP_ANALYTICS_HPP
#define NNDISP_ANALYTICS_HPP

#include <cstdint>
#include <span>
#include <string>

#include "nndisp/sampling.hpp"

namespace nndisp::analytics {

// Upper normal tail Q(x) = Pr[N(0,1) >= x].  Extended precision so the deep
// tail stays positive (Q(40) underflows a double).
long double gaussian_q(double x);

// Q^{-1}(p) on (0, 1), accurate to full double precision.
double gaussian_q_inv(double p);

// All rates in nats.  C(P) = 0.5 * ln(1 + P).
double capacity(double power);

// Gaussian-noise dispersion P(P+2) / (2 (P+1)^2).
double v_gauss(double power);

// Shell-codebook dispersion under noise kurtosis xi:
//   (P^2 (xi - 1) + 4 P) / (4 (P + 1)^2).
double v_shell(double power, double xi);

// I.i.d.-Gaussian-codebook dispersion:
//   (P^2 (xi + 1) + 4 P) / (4 (P + 1)^2).
double v_iid(double power, double xi);

struct Sinr {
  double p_bar;    // P1 / (1 + sum of interferer powers)
  double p_tilde;  // total interferer power
};

Sinr sinr(double p1, std::span<const double> interferer_powers);

// Effective kurtosis after folding variance-P~ Gaussian interference into the
// noise: (3 P~^2 + 6 P~ + xi) / (P~ + 1)^2.  Reduces to xi at P~ = 0.
double xi_prime(double xi, double p_tilde);

// Dispersion of user 1 when every user transmits a shell codeword:
//   [P1^2 (xi - 1 + 4 P~) + 4 P1 (P~+1)^3 + 4 P1^2 sum_{i<j} Pi Pj]
//     / [4 (P~+1)^2 (P1 + P~ + 1)^2].
// With no interferers this collapses to v_shell(P1, xi).
double v_shell_interference(double p1, std::span<const double> interferer_powers,
                            double xi);

// Gaussian-channel information density used as the decoding metric:
//   i(x, y) = C(P) + y^2 / (2 (P+1)) - (y - x)^2 / 2.
double info_density(double x, double y, double power);
double info_density_sum(std::span<const double> x, std::span<const double> y,
                        double power);

// Two-term normal approximation: n C - sqrt(n V) Q^{-1}(eps).
double normal_approx_log_m(std::int64_t n, double eps, double capacity_nats,
                           double dispersion);

struct DispersionReport {
  std::string intended_codebook;
  std::string interferer_codebook;
  double power;            // P1
  double p_bar;            // SINR (equals P1 without interferers)
  double p_tilde;
  double capacity;         // nats per channel use, at p_bar
  double dispersion;       // nats^2 per channel use
  double xi;               // raw noise kurtosis
  double xi_effective;     // xi_prime(xi, p_tilde)
  std::int64_t n;
  double eps;
  double log_m;            // nats
  double rate;             // log_m / n
};

// Assembles the second-order report for the configured codebook combination.
// Supported: shell/shell (interference dispersion), shell/iid (effective-
// kurtosis route: v_shell at p_bar with xi'), iid/iid.  An i.i.d. sender
// facing shell interferers has no closed form and is rejected.
DispersionReport dispersion_report(CodebookKind intended, CodebookKind interferers,
                                   double p1,
                                   std::span<const double> interferer_powers,
                                   double xi, std::int64_t n, double eps);

}  // namespace nndisp::analytics

#endif
