#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wavesrc/field.hpp"
#include "wavesrc/noise.hpp"
#include "wavesrc/problem.hpp"

namespace wavesrc {

/// Units of the rows of an assembled system.
///
/// kStencil rows are the undivided one-sided stencil sums, i.e. each flux
/// equation multiplied through by 2*dx. This is the form in which the flux
/// condition enters the global linear system, and it is the scale on which
/// published regularization parameters for this problem are quoted.
/// kFlux rows are in flux units (row scale 1).
enum class RowUnits { kStencil, kFlux };

/// Dense reduced system A f = b after eliminating all displacement unknowns.
///
/// Rows: N Left-flux equations, followed by N Right-flux equations for the
/// dual-source case. Columns: M-1 unknowns of f, followed by M-1 of g.
/// `background` holds the zero-force fluxes for the true initial/boundary
/// data (one series per observed end), in flux units.
struct InverseSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  std::vector<FluxSeries> background;

  GridSpec grid;
  Eigen::MatrixXd basis_f;
  std::optional<Eigen::MatrixXd> basis_g;
  RowUnits units = RowUnits::kStencil;
  double row_scale = 1.0;
  std::optional<NoiseSpec> noise;

  int blocks() const { return basis_g ? 2 : 1; }
};

double row_scale(const GridSpec& grid, RowUnits units);

/// Single-source system from the Left flux. Column k is the Left flux
/// response to a unit force at x_k with zero data; b is the measured flux
/// minus the zero-force flux of the true data, both times row_scale.
/// Throws Error{kUnderdeterminedSystem} when N < M-1.
InverseSystem assemble_single(const GridSpec& grid, const InitialData& initial,
                              const BoundaryData& boundary,
                              const Eigen::MatrixXd& basis,
                              const FluxSeries& measured_left,
                              RowUnits units = RowUnits::kStencil);

/// Dual-source system from both ends; the g block is driven by basis_g.
InverseSystem assemble_dual(const GridSpec& grid, const InitialData& initial,
                            const BoundaryData& boundary,
                            const Eigen::MatrixXd& basis_f,
                            const Eigen::MatrixXd& basis_g,
                            const FluxSeries& measured_left,
                            const FluxSeries& measured_right,
                            RowUnits units = RowUnits::kStencil);

/// Singular values below this fraction of the largest count as zero.
inline constexpr double kRankTolerance = 1e-12;

/// Minimizer of ||A x - b||_2 via SVD. Throws Error{kRankDeficient}.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& matrix,
                              const Eigen::VectorXd& rhs);

ForceVector least_squares(const InverseSystem& system);

/// A x - b.
Eigen::VectorXd residual(const InverseSystem& system,
                         const Eigen::VectorXd& strengths);

/// Row-major CSV dump, no header.
void write_system_csv(std::ostream& matrix_out, std::ostream& rhs_out,
                      const InverseSystem& system);

}  // namespace wavesrc
