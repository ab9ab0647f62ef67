#ifndef NNDISP_DELTA_METHOD_HPP
#define NNDISP_DELTA_METHOD_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nndisp/random.hpp"

namespace nndisp::delta_method {

// Linearization of a smooth function of vector sample means: variance of the
// limiting normal law is J^T V J.  The covariance is stored as a full
// row-major matrix even when assembled diagonal.
struct DeltaSpec {
  std::vector<double> jacobian;
  std::vector<double> covariance;  // dim x dim, row-major
  std::vector<std::string> labels;

  std::size_t dim() const { return jacobian.size(); }
};

double delta_variance(const DeltaSpec& spec);

// Point-to-point decoding statistic P||Z||^2 - nP - 2<X,Z> decomposed over
// the per-symbol families (1 - Z^2, sqrt(P) X Z, X^2 - 1):
//   J = [P, 2, 0],  V = diag(xi - 1, P, 2),  J^T V J = P^2 (xi - 1) + 4 P.
DeltaSpec p2p_spec(double power, double xi);

// Interference statistic (P1+P~+1)||x~+z||^2 - (P~+1)||x1+x~+z||^2 over the
// seven per-symbol families; with K-1 interferers the dimension is
// 3 + 3(K-1) + (K-1)(K-2)/2 and J^T V J equals
//   P1^2 (xi-1+4P~) + 4 P1 (P~+1)^3 + 4 P1^2 sum_{i<j} Pi Pj.
DeltaSpec interference_spec(double p1, std::span<const double> interferer_powers,
                            double xi);

struct KsPoint {
  std::int64_t n;
  double distance;
};

struct CltResult {
  std::vector<KsPoint> points;
  double decay_slope;  // least-squares slope of log(distance) vs log(n)
};

// Standardizes sampler(n, stream) by sqrt(n sigma2) and measures the exact
// one-sample Kolmogorov-Smirnov distance to the standard normal CDF at each
// blocklength, plus the fitted log-log decay slope.
CltResult clt_check(const std::function<double(std::int64_t, RandomStream&)>& sampler,
                    double sigma2, std::span<const std::int64_t> n_values,
                    std::int64_t trials, std::uint64_t seed);

// Exact one-sample KS distance of a sample against the standard normal CDF.
double ks_distance_normal(std::span<double> sample);

}  // namespace nndisp::delta_method

#endif
