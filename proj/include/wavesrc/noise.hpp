#pragma once

#include <cstdint>

#include "wavesrc/field.hpp"

namespace wavesrc {

/// Additive Gaussian noise with sigma = fraction * max_j |q_j|.
/// `fraction` is 0.01 for 1% noise.
struct NoiseSpec {
  double fraction = 0.0;
  std::uint64_t seed = 0;
};

/// Perturbs every entry of `series` with an independent N(0, sigma^2) draw.
///
/// The stream is std::mt19937_64 seeded from (seed, end) through
/// std::seed_seq, and draws come from std::normal_distribution, so Left and
/// Right series get independent sub-streams and output is reproducible for
/// a given build. fraction == 0 returns the input unchanged.
FluxSeries add_noise(const FluxSeries& series, const NoiseSpec& spec);

/// sigma used by add_noise for this series.
double noise_sigma(const FluxSeries& series, const NoiseSpec& spec);

}  // namespace wavesrc
