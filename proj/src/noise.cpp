#include "nndisp/noise.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "nndisp/error.hpp"

namespace nndisp {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935274463415059;
constexpr double kLaplaceScale = 0.70710678118654752440084436210485;  // 1/sqrt(2)

NoiseMoments table_moments(const std::vector<double>& v, const std::vector<double>& p) {
  NoiseMoments m{0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double v2 = v[i] * v[i];
    m.m1 += p[i] * v[i];
    m.m2 += p[i] * v2;
    m.xi += p[i] * v2 * v2;
    m.m6 += p[i] * v2 * v2 * v2;
  }
  return m;
}

}  // namespace

NoiseModel NoiseModel::gaussian() {
  return NoiseModel(NoiseKind::Gaussian, {0.0, 1.0, 3.0, 15.0});
}

NoiseModel NoiseModel::laplace() {
  return NoiseModel(NoiseKind::Laplace, {0.0, 1.0, 6.0, 90.0});
}

NoiseModel NoiseModel::rademacher() {
  return NoiseModel(NoiseKind::Rademacher, {0.0, 1.0, 1.0, 1.0});
}

NoiseModel NoiseModel::uniform() {
  return NoiseModel(NoiseKind::Uniform, {0.0, 1.0, 9.0 / 5.0, 27.0 / 7.0});
}

NoiseModel NoiseModel::finite_table(std::vector<double> values,
                                    std::vector<double> probabilities) {
  if (values.empty() || values.size() != probabilities.size())
    throw_domain("finite table needs matching nonempty values/probabilities lists");
  double psum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw_domain("finite table support values must be finite");
    if (!(probabilities[i] >= 0.0))
      throw_domain("finite table probabilities must be nonnegative");
    psum += probabilities[i];
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw_domain("finite table probabilities must sum to 1 (within 1e-12)");
  const NoiseMoments m = table_moments(values, probabilities);
  if (std::abs(m.m2 - 1.0) > 1e-12)
    throw_domain("finite table must have unit second moment E[Z^2] = 1 (within 1e-12)");

  NoiseModel model(NoiseKind::FiniteTable, m);
  model.values_ = std::move(values);
  model.cumulative_.resize(model.values_.size());
  double run = 0.0;
  for (std::size_t i = 0; i < model.values_.size(); ++i) {
    run += probabilities[i];
    model.cumulative_[i] = run;
  }
  model.cumulative_.back() = 1.0;
  return model;
}

NoiseModel NoiseModel::finite_table_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw_io(std::string("noise table is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("values") || !j.contains("probabilities"))
    throw_io("noise table JSON must be an object with \"values\" and \"probabilities\" arrays");
  try {
    return finite_table(j["values"].get<std::vector<double>>(),
                        j["probabilities"].get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw_io(std::string("noise table arrays must be numeric: ") + e.what());
  }
}

std::string NoiseModel::name() const {
  switch (kind_) {
    case NoiseKind::Gaussian: return "gaussian";
    case NoiseKind::Laplace: return "laplace";
    case NoiseKind::Rademacher: return "rademacher";
    case NoiseKind::Uniform: return "uniform";
    case NoiseKind::FiniteTable: return "finite_table";
  }
  return "unknown";
}

namespace detail {

std::size_t table_index(double u, std::span<const double> cumulative) {
  const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) return cumulative.size() - 1;
  return static_cast<std::size_t>(it - cumulative.begin());
}

}  // namespace detail

double NoiseModel::sample_one(RandomStream& stream) const {
  switch (kind_) {
    case NoiseKind::Gaussian:
      return stream.next_normal();
    case NoiseKind::Laplace: {
      // |Z| ~ Exp(sqrt(2)), sign from an independent bit.
      const double u = 1.0 - stream.next_unit();  // (0, 1]
      const double mag = -kLaplaceScale * std::log(u);
      return (stream.next_u32() & 1u) ? mag : -mag;
    }
    case NoiseKind::Rademacher:
      return (stream.next_u32() & 1u) ? 1.0 : -1.0;
    case NoiseKind::Uniform:
      return kSqrt3 * (2.0 * stream.next_unit() - 1.0);
    case NoiseKind::FiniteTable:
      return values_[detail::table_index(stream.next_unit(), cumulative_)];
  }
  throw_domain("unknown noise kind");
}

void NoiseModel::sample(std::span<double> out, RandomStream& stream) const {
  for (double& x : out) x = sample_one(stream);
}

std::vector<double> sample_noise(const NoiseModel& model, std::int64_t n,
                                 RandomStream& stream) {
  if (n < 1) throw_domain("noise sample length must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  model.sample(out, stream);
  return out;
}

}  // namespace nndisp
