#pragma once

#include <Eigen/Dense>

#include "wavesrc/grid.hpp"

namespace wavesrc {

/// Displacement u(x_i, t_j) on the full mesh, (M+1) x (N+1).
struct WaveField {
  GridSpec grid;
  Eigen::MatrixXd u;
};

enum class BoundaryEnd { kLeft, kRight };

/// Outward normal derivative at one end, sampled at t_1..t_N.
/// Left holds -du/dx(0,t), Right holds +du/dx(L,t).
struct FluxSeries {
  BoundaryEnd end = BoundaryEnd::kLeft;
  Eigen::VectorXd values;
};

/// Force strengths on interior nodes. Dual-source vectors stack f then g.
struct ForceVector {
  Eigen::VectorXd values;
  int blocks = 1;

  Eigen::Index block_size() const { return values.size() / blocks; }
  Eigen::VectorXd f() const { return values.head(block_size()); }
  Eigen::VectorXd g() const { return values.tail(block_size()); }
};

}  // namespace wavesrc
