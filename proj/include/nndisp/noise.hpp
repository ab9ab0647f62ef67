#ifndef NNDISP_NOISE_HPP
#define NNDISP_NOISE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nndisp/random.hpp"

namespace nndisp {

enum class NoiseKind { Gaussian, Laplace, Rademacher, Uniform, FiniteTable };

// Moments under the unit-power normalization E[Z^2] = 1.  xi = E[Z^4] is the
// only statistic beyond power that enters any dispersion formula; m6 is kept
// for diagnostics.  The mean need not be zero (finite tables may be skewed).
struct NoiseMoments {
  double m1;
  double m2;
  double xi;
  double m6;
};

class NoiseModel {
 public:
  static NoiseModel gaussian();
  static NoiseModel laplace();      // scale 1/sqrt(2), so E[Z^2] = 1
  static NoiseModel rademacher();   // +-1 with equal probability
  static NoiseModel uniform();      // uniform on [-sqrt(3), sqrt(3)]

  // Discrete law on the given support.  Probabilities must be nonnegative and
  // sum to 1 within 1e-12; E[Z^2] = 1 is enforced to 1e-12 at construction.
  static NoiseModel finite_table(std::vector<double> values,
                                 std::vector<double> probabilities);

  // Parses {"values": [...], "probabilities": [...]} from a JSON string.
  static NoiseModel finite_table_from_json(const std::string& json_text);

  NoiseKind kind() const noexcept { return kind_; }
  const NoiseMoments& moments() const noexcept { return moments_; }
  std::string name() const;

  double sample_one(RandomStream& stream) const;
  void sample(std::span<double> out, RandomStream& stream) const;

 private:
  NoiseModel(NoiseKind kind, NoiseMoments moments) : kind_(kind), moments_(moments) {}

  NoiseKind kind_;
  NoiseMoments moments_;
  std::vector<double> values_;      // finite table only
  std::vector<double> cumulative_;  // running probability sums, last entry 1
};

inline NoiseMoments moments(const NoiseModel& model) { return model.moments(); }

std::vector<double> sample_noise(const NoiseModel& model, std::int64_t n,
                                 RandomStream& stream);

namespace detail {
// Inverse-CDF index lookup for finite tables; a draw landing exactly on a
// cumulative boundary resolves to the lower-index support point.
std::size_t table_index(double u, std::span<const double> cumulative);
}  // namespace detail

}  // namespace nndisp

#endif
