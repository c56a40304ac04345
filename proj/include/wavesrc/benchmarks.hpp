#pragma once

#include <functional>
#include <optional>

#include "wavesrc/field.hpp"
#include "wavesrc/problem.hpp"

namespace wavesrc {

/// Closed-form data of one benchmark on the unit string (c = L = 1).
///
///  1: u0 = sin(pi x), v0 = 1, P0 = PL = t + t^2/2, h = 1,
///     f = 1 + pi^2 sin(pi x), u = sin(pi x) + t + t^2/2.
///  2-4: zero initial and boundary data, hat force f = x on [0, 1/2],
///     1 - x on (1/2, 1], with h = 1 + t, 1 + x + t and t^2.
///  5: u0 = sin(pi x), v0 = x^2 + 1, P0 = t + t^2/2, PL = 2t + t^2/2,
///     h = 1, theta = t, f as in 1, g = -2,
///     u = x^2 t + sin(pi x) + t + t^2/2.
struct ExampleSpec {
  int id = 0;
  std::function<double(double)> initial_displacement;
  std::function<double(double)> initial_velocity;
  std::function<double(double)> left_boundary;
  std::function<double(double)> right_boundary;
  std::function<double(double, double)> basis_f;
  std::function<double(double, double)> basis_g;  ///< only for id 5
  std::function<double(double)> exact_f;
  std::function<double(double)> exact_g;  ///< only for id 5
  std::function<double(double, double)> exact_displacement;  ///< ids 1, 5
  /// Analytic fluxes (ids 1 and 5); otherwise data come from a direct solve.
  std::function<double(double)> exact_left_flux;
  std::function<double(double)> exact_right_flux;
};

/// Throws Error{kUnknownExample} for ids outside 1..5.
const ExampleSpec& example_spec(int id);

/// A benchmark sampled onto a grid.
struct Example {
  int id = 0;
  /// Initial/boundary data plus a SingleSource (ids 1-4) or DualSource
  /// (id 5) whose strengths are the exact f (and g).
  WaveProblem problem;
  ForceVector exact_force;

  bool dual() const { return exact_force.blocks == 2; }
  const Eigen::MatrixXd& basis_f() const;
  const Eigen::MatrixXd& basis_g() const;
  /// The same problem with the strengths cleared.
  SourceModel unknown_source() const;
};

/// Requires L = c = 1 (Error{kInvalidArgument}); any horizon T works.
Example make_example(int id, const GridSpec& grid);

/// Flux data for inversion. Ids 1 and 5 use the analytic flux. Ids 2-4 use
/// a direct solve with the exact force on a mesh refined by `refine` in both
/// directions, sampled back at the coarse t_1..t_N. refine = 1 generates the
/// data on the inversion mesh itself.
FluxSeries measured_flux(int id, const GridSpec& grid, BoundaryEnd end,
                         int refine = 1);

/// Samples a function of x on x_0..x_M, or of t on t_0..t_N.
Eigen::VectorXd sample_space(const GridSpec& grid,
                             const std::function<double(double)>& fn);
Eigen::VectorXd sample_time(const GridSpec& grid,
                            const std::function<double(double)>& fn);
/// (M+1) x (N+1) samples of fn(x, t).
Eigen::MatrixXd sample_mesh(const GridSpec& grid,
                            const std::function<double(double, double)>& fn);

}  // namespace wavesrc

namespace wavesrc {

/// Noise levels of the regularized-accuracy study, as fractions.
inline constexpr double kStudyNoiseLevels[3] = {0.01, 0.03, 0.05};

/// Decade-resolution error-minimizing regularization parameter for examples
/// 2-4, order 0-2 and noise index 0-2 (1%, 3%, 5%), quoted on the
/// RowUnits::kStencil scale.
double reference_lambda(int example_id, int order, int noise_index);

}  // namespace wavesrc
