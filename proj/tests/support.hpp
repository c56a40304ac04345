#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wavesrc::testing {

inline Eigen::MatrixXd random_matrix(std::mt19937_64& rng, Eigen::Index rows,
                                     Eigen::Index cols, double lo = -1.0,
                                     double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = dist(rng);
  }
  return m;
}

inline Eigen::VectorXd random_vector(std::mt19937_64& rng, Eigen::Index size,
                                     double lo = -1.0, double hi = 1.0) {
  return random_matrix(rng, size, 1, lo, hi);
}

inline double relative_diff(const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b) {
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0.0 ? 0.0 : (a - b).norm() / scale;
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("wavesrc_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Plain scalar recurrence written from the scheme itself, nothing shared with
// the library.
inline std::vector<std::vector<double>> scalar_oracle(
    int M, int N, double dx, double dt, double c,
    const std::vector<double>& u0, const std::vector<double>& v0,
    const std::vector<double>& p0, const std::vector<double>& pl,
    const std::vector<std::vector<double>>& F) {
  const double r2 = (c * dt / dx) * (c * dt / dx);
  std::vector<std::vector<double>> u(M + 1, std::vector<double>(N + 1, 0.0));
  for (int i = 0; i <= M; ++i) u[i][0] = u0[i];
  for (int j = 0; j <= N; ++j) {
    u[0][j] = p0[j];
    u[M][j] = pl[j];
  }
  for (int i = 1; i < M; ++i) {
    u[i][1] = 0.5 * r2 * (u0[i + 1] + u0[i - 1]) + (1 - r2) * u0[i] +
              dt * v0[i] + 0.5 * dt * dt * F[i][0];
  }
  for (int j = 1; j < N; ++j) {
    for (int i = 1; i < M; ++i) {
      u[i][j + 1] = r2 * (u[i + 1][j] + u[i - 1][j]) + 2 * (1 - r2) * u[i][j] -
                    u[i][j - 1] + dt * dt * F[i][j];
    }
  }
  return u;
}

}  // namespace wavesrc::testing
