#include "wavesrc/noise.hpp"

#include <cmath>
#include <random>

#include "wavesrc/errors.hpp"

namespace wavesrc {

double noise_sigma(const FluxSeries& series, const NoiseSpec& spec) {
  if (!(spec.fraction >= 0.0) || !std::isfinite(spec.fraction)) {
    throw Error(ErrorCode::kInvalidArgument,
                "noise fraction must be finite and >= 0");
  }
  if (series.values.size() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "empty flux series");
  }
  return spec.fraction * series.values.cwiseAbs().maxCoeff();
}

FluxSeries add_noise(const FluxSeries& series, const NoiseSpec& spec) {
  const double sigma = noise_sigma(series, spec);
  if (sigma == 0.0) return series;

  const auto end_tag = static_cast<std::uint32_t>(
      series.end == BoundaryEnd::kLeft ? 0x4c : 0x52);
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed & 0xffffffffu),
                    static_cast<std::uint32_t>(spec.seed >> 32), end_tag};
  std::mt19937_64 engine(seq);
  std::normal_distribution<double> normal(0.0, sigma);

  FluxSeries noisy = series;
  for (Eigen::Index j = 0; j < noisy.values.size(); ++j) {
    noisy.values(j) += normal(engine);
  }
  return noisy;
}

}  // namespace wavesrc
