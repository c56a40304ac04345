#pragma once

namespace wavesrc {

/// Uniform space-time mesh on [0, length] x [0, horizon].
///
/// Nodes are x_i = i*dx (i = 0..space_cells) and t_j = j*dt
/// (j = 0..time_steps). Only make_grid() constructs one, so every instance
/// satisfies dx, dt > 0 and 0 < courant() <= 1.
class GridSpec {
 public:
  double length() const { return length_; }
  double horizon() const { return horizon_; }
  int space_cells() const { return space_cells_; }
  int time_steps() const { return time_steps_; }
  double wave_speed() const { return wave_speed_; }

  double dx() const { return dx_; }
  double dt() const { return dt_; }
  /// c*dt/dx.
  double courant() const { return courant_; }

  double x(int i) const { return i * dx_; }
  double t(int j) const { return j * dt_; }

  /// Interior node count, i.e. the size of one unknown force block.
  int interior_nodes() const { return space_cells_ - 1; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  friend GridSpec make_grid(double, double, int, int, double);
  GridSpec() = default;

  double length_ = 0.0;
  double horizon_ = 0.0;
  int space_cells_ = 0;
  int time_steps_ = 0;
  double wave_speed_ = 0.0;
  double dx_ = 0.0;
  double dt_ = 0.0;
  double courant_ = 0.0;
};

/// Throws Error{kInvalidDimension} for space_cells < 2, time_steps < 1 or
/// non-positive extents, and Error{kCflViolation} when c*dt/dx > 1.
GridSpec make_grid(double length, double horizon, int space_cells,
                   int time_steps, double wave_speed);

}  // namespace wavesrc
