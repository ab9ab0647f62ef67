#ifndef NNDISP_EXACT_ERROR_HPP
#define NNDISP_EXACT_ERROR_HPP

#include <cstdint>

namespace nndisp::exact_error {

// Conditioning state of one channel realization: empirical output power
// p_y_hat = ||y||^2 / n and empirical distance power p_z_hat = ||y - x||^2 / n
// for a code of per-symbol power P at blocklength n.
struct EmpiricalPowers {
  double p_y_hat;
  double p_z_hat;
  std::int64_t n;
  double power;
};

// Pr[X1 >= t] for the first coordinate of a uniform draw on the shell
// ||x||^2 = n P.  Via the symmetric Beta((n-1)/2, (n-1)/2) law of
// (1 + X1/sqrt(nP)) / 2; requires n >= 2.
double shell_tail(double t, std::int64_t n, double power);

// Probability that one independent shell codeword beats the transmitted one
// under nearest-neighbor decoding, conditioned on (p_y_hat, p_z_hat):
//   Psi = Pr[ X1 >= (n p_y + n P - n p_z) / (2 sqrt(n p_y)) ].
double psi_shell(const EmpiricalPowers& ep);

// Same for an i.i.d. Gaussian competitor: ||Xbar - y||^2 / P is noncentral
// chi-square with n dof and noncentrality n p_y / P, so
//   Psi = F_{chi2'_n(n p_y / P)}(n p_z / P).
double psi_iid(const EmpiricalPowers& ep);

// Exact conditional ensemble error over M-1 independent competitors:
//   1 - (1 - psi)^(M-1), evaluated as -expm1((M-1) log1p(-psi)).
double conditional_error(double psi, std::int64_t m);

// Real-valued M = exp(log_m); (M-1) = expm1(log_m), switched to a log-domain
// product when exp would overflow.  log_m = 0 (M = 1) gives 0.
double conditional_error_log_m(double psi, double log_m);

struct ExponentResult {
  double s_star;    // maximizer of the Chernoff objective, clamped to s >= 0
  double exponent;  // value at s_star
};

// Large-deviations exponent of the i.i.d. competitor probability:
//   E = sup_{s>=0} [ p_y s / (P (1+2s)) + 0.5 log(1+2s) - s p_z / P ],
// with the closed-form maximizer
//   s* = (P - 2 p_z + sqrt(P^2 + 4 p_y p_z)) / (4 p_z).
// At the channel center (p_y, p_z) = (P+1, 1) this equals C(P).
ExponentResult ld_exponent(const EmpiricalPowers& ep);

// First-order expansion of the exponent around the center:
//   C(P) + p_y / (2 (P+1)) - p_z / 2.
double exponent_taylor_ref(const EmpiricalPowers& ep);

// Shell analogue of the exponent:
//   -0.5 log(1 - (p_y + P - p_z)^2 / (4 P p_y)),
// the n -> inf limit of -(1/n) log(2 psi_shell).
double shell_log_psi_exponent(const EmpiricalPowers& ep);

}  // namespace nndisp::exact_error

#endif
