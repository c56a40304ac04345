#include "wavesrc/direct_solver.hpp"

#include "wavesrc/errors.hpp"

namespace wavesrc {

WaveField solve_direct(const GridSpec& grid, const InitialData& initial,
                       const BoundaryData& boundary,
                       const Eigen::MatrixXd& force) {
  validate_initial(initial, grid);
  validate_boundary(boundary, grid);
  validate_source(KnownForce{force}, grid);

  const int m = grid.space_cells();
  const int n = grid.time_steps();
  const double r2 = grid.courant() * grid.courant();
  const double dt = grid.dt();
  const double dt2 = dt * dt;

  Eigen::MatrixXd u(m + 1, n + 1);
  u.col(0) = initial.displacement;
  u.row(0) = boundary.left.transpose();
  u.row(m) = boundary.right.transpose();

  const Eigen::VectorXd& u0 = initial.displacement;
  for (int i = 1; i < m; ++i) {
    u(i, 1) = 0.5 * r2 * u0(i + 1) + (1.0 - r2) * u0(i) + 0.5 * r2 * u0(i - 1) +
              dt * initial.velocity(i) + 0.5 * dt2 * force(i, 0);
  }
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < m; ++i) {
      u(i, j + 1) = r2 * u(i + 1, j) + 2.0 * (1.0 - r2) * u(i, j) +
                    r2 * u(i - 1, j) - u(i, j - 1) + dt2 * force(i, j);
    }
  }
  return {grid, std::move(u)};
}

WaveField solve_direct(const WaveProblem& problem) {
  return solve_direct(problem.grid(), problem.initial(), problem.boundary(),
                      resolve_force(problem.source(), problem.grid()));
}

Eigen::VectorXd flux_stencil_sums(const WaveField& field, BoundaryEnd end) {
  const int m = field.grid.space_cells();
  const int n = field.grid.time_steps();
  if (m < 2 || field.u.rows() != m + 1 || field.u.cols() != n + 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "flux stencil needs a full field with at least 3 nodes");
  }
  Eigen::VectorXd sums(n);
  for (int j = 1; j <= n; ++j) {
    if (end == BoundaryEnd::kLeft) {
      sums(j - 1) =
          -(4.0 * field.u(1, j) - field.u(2, j) - 3.0 * field.u(0, j));
    } else {
      sums(j - 1) = 3.0 * field.u(m, j) - 4.0 * field.u(m - 1, j) +
                    field.u(m - 2, j);
    }
  }
  return sums;
}

FluxSeries flux(const WaveField& field, BoundaryEnd end) {
  return {end, flux_stencil_sums(field, end) / (2.0 * field.grid.dx())};
}

}  // namespace wavesrc
