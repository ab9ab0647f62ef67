#ifndef NNDISP_SPECIAL_HPP
#define NNDISP_SPECIAL_HPP

namespace nndisp::special {

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation
// (modified Lentz).  Absolute accuracy ~1e-14 for moderate a, b; the callers
// rely on 1e-12.
double reg_incomplete_beta(double a, double b, double x);

// Regularized lower incomplete gamma P(a, x): series for x < a+1, continued
// fraction otherwise.
double reg_lower_gamma(double a, double x);

// CDF of the noncentral chi-square law with `dof` degrees of freedom and
// noncentrality `lambda`, evaluated at x.  Two-sided Poisson mixture around
// the mode; series truncated when the remaining Poisson mass is below 1e-13.
double noncentral_chi2_cdf(double x, double dof, double lambda);

// Upper normal tail Q(x) in extended precision.  Extended range matters:
// Q(40) ~ 3.7e-350 underflows a double but stays representable here.
long double normal_upper_tail(long double x);

// Inverse of Q on (0, 1): rational initial approximation (relative error
// ~1.15e-9) refined by one Newton step on Q, giving full double accuracy.
double normal_upper_quantile(double p);

}  // namespace nndisp::special

#endif
