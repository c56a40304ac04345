#include "wavesrc/inverse_system.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <span>
#include <sstream>
#include <thread>

#include "wavesrc/csv.hpp"
#include "wavesrc/direct_solver.hpp"
#include "wavesrc/errors.hpp"

namespace wavesrc {

namespace {

// Runs body(k) for k in [0, count) over a few threads. Each k must write to
// its own slot.
void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::clamp(
      static_cast<int>(std::thread::hardware_concurrency()), 1,
      std::max(1, count / 8));
  if (workers <= 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&body, w, workers, count] {
      for (int k = w; k < count; k += workers) body(k);
    });
  }
}

Eigen::VectorXd scaled_rows(const WaveField& field, BoundaryEnd end,
                            RowUnits units) {
  return units == RowUnits::kStencil ? flux_stencil_sums(field, end)
                                     : flux(field, end).values;
}

void check_series(const FluxSeries& series, const GridSpec& grid,
                  BoundaryEnd end) {
  if (series.end != end) {
    throw Error(ErrorCode::kDimensionMismatch,
                "measured flux attached to the wrong boundary end");
  }
  if (series.values.size() != grid.time_steps()) {
    std::ostringstream msg;
    msg << "measured flux: expected " << grid.time_steps()
        << " samples, got " << series.values.size();
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
}

// Fills the columns of `matrix` for one basis block.
void assemble_block(const GridSpec& grid, const Eigen::MatrixXd& basis,
                    std::span<const BoundaryEnd> ends, RowUnits units,
                    Eigen::Index first_column, Eigen::MatrixXd& matrix) {
  const InitialData rest = InitialData::zero(grid);
  const BoundaryData clamped = BoundaryData::zero(grid);
  const int n = grid.time_steps();
  parallel_for(grid.interior_nodes(), [&](int k) {
    const int node = k + 1;
    Eigen::MatrixXd force =
        Eigen::MatrixXd::Zero(grid.space_cells() + 1, n + 1);
    force.row(node) = basis.row(node);
    const WaveField field = solve_direct(grid, rest, clamped, force);
    for (std::size_t e = 0; e < ends.size(); ++e) {
      matrix.col(first_column + k).segment(e * n, n) =
          scaled_rows(field, ends[e], units);
    }
  });
}

}  // namespace

double row_scale(const GridSpec& grid, RowUnits units) {
  return units == RowUnits::kStencil ? 2.0 * grid.dx() : 1.0;
}

InverseSystem assemble_single(const GridSpec& grid, const InitialData& initial,
                              const BoundaryData& boundary,
                              const Eigen::MatrixXd& basis,
                              const FluxSeries& measured_left,
                              RowUnits units) {
  validate_initial(initial, grid);
  validate_boundary(boundary, grid);
  validate_source(SingleSource{basis, std::nullopt}, grid);
  check_series(measured_left, grid, BoundaryEnd::kLeft);
  if (grid.time_steps() < grid.interior_nodes()) {
    throw Error(ErrorCode::kUnderdeterminedSystem,
                "need N >= M-1 flux observations");
  }

  const int n = grid.time_steps();
  InverseSystem system{.matrix = Eigen::MatrixXd(n, grid.interior_nodes()),
                       .rhs = {},
                       .background = {},
                       .grid = grid,
                       .basis_f = basis,
                       .basis_g = std::nullopt,
                       .units = units,
                       .row_scale = row_scale(grid, units),
                       .noise = std::nullopt};

  const BoundaryEnd ends[] = {BoundaryEnd::kLeft};
  assemble_block(grid, basis, ends, units, 0, system.matrix);

  const Eigen::MatrixXd no_force =
      Eigen::MatrixXd::Zero(grid.space_cells() + 1, n + 1);
  const WaveField free_field = solve_direct(grid, initial, boundary, no_force);
  system.background.push_back(flux(free_field, BoundaryEnd::kLeft));
  system.rhs = system.row_scale * measured_left.values -
               scaled_rows(free_field, BoundaryEnd::kLeft, units);
  return system;
}

InverseSystem assemble_dual(const GridSpec& grid, const InitialData& initial,
                            const BoundaryData& boundary,
                            const Eigen::MatrixXd& basis_f,
                            const Eigen::MatrixXd& basis_g,
                            const FluxSeries& measured_left,
                            const FluxSeries& measured_right,
                            RowUnits units) {
  validate_initial(initial, grid);
  validate_boundary(boundary, grid);
  validate_source(DualSource{basis_f, basis_g, std::nullopt, std::nullopt},
                  grid);
  check_series(measured_left, grid, BoundaryEnd::kLeft);
  check_series(measured_right, grid, BoundaryEnd::kRight);
  if (grid.time_steps() < grid.interior_nodes()) {
    throw Error(ErrorCode::kUnderdeterminedSystem,
                "need 2N >= 2(M-1) flux observations");
  }

  const int n = grid.time_steps();
  const int unknowns = grid.interior_nodes();
  InverseSystem system{.matrix = Eigen::MatrixXd(2 * n, 2 * unknowns),
                       .rhs = {},
                       .background = {},
                       .grid = grid,
                       .basis_f = basis_f,
                       .basis_g = basis_g,
                       .units = units,
                       .row_scale = row_scale(grid, units),
                       .noise = std::nullopt};

  const BoundaryEnd ends[] = {BoundaryEnd::kLeft, BoundaryEnd::kRight};
  assemble_block(grid, basis_f, ends, units, 0, system.matrix);
  assemble_block(grid, basis_g, ends, units, unknowns, system.matrix);

  const Eigen::MatrixXd no_force =
      Eigen::MatrixXd::Zero(grid.space_cells() + 1, n + 1);
  const WaveField free_field = solve_direct(grid, initial, boundary, no_force);
  system.background.push_back(flux(free_field, BoundaryEnd::kLeft));
  system.background.push_back(flux(free_field, BoundaryEnd::kRight));
  system.rhs.resize(2 * n);
  system.rhs.head(n) = system.row_scale * measured_left.values -
                       scaled_rows(free_field, BoundaryEnd::kLeft, units);
  system.rhs.tail(n) = system.row_scale * measured_right.values -
                       scaled_rows(free_field, BoundaryEnd::kRight, units);
  return system;
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& matrix,
                              const Eigen::VectorXd& rhs) {
  if (matrix.rows() != rhs.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "right-hand side length differs from row count");
  }
  if (matrix.rows() < matrix.cols()) {
    throw Error(ErrorCode::kUnderdeterminedSystem,
                "fewer equations than unknowns");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0 ||
      sv(sv.size() - 1) < kRankTolerance * sv(0)) {
    std::ostringstream msg;
    msg << "matrix is numerically rank deficient (sv_min/sv_max = "
        << (sv.size() && sv(0) > 0.0 ? sv(sv.size() - 1) / sv(0) : 0.0)
        << ")";
    throw Error(ErrorCode::kRankDeficient, msg.str());
  }
  return svd.matrixV() *
         (svd.matrixU().transpose() * rhs).cwiseQuotient(sv);
}

ForceVector least_squares(const InverseSystem& system) {
  return {least_squares(system.matrix, system.rhs), system.blocks()};
}

Eigen::VectorXd residual(const InverseSystem& system,
                         const Eigen::VectorXd& strengths) {
  return system.matrix * strengths - system.rhs;
}

void write_system_csv(std::ostream& matrix_out, std::ostream& rhs_out,
                      const InverseSystem& system) {
  write_matrix_csv(matrix_out, system.matrix);
  write_matrix_csv(rhs_out, system.rhs);
}

}  // namespace wavesrc
