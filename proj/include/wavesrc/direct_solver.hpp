#pragma once

#include <Eigen/Dense>

#include "wavesrc/field.hpp"
#include "wavesrc/problem.hpp"

namespace wavesrc {

/// Explicit central-difference march for u_tt = c^2 u_xx + F with Dirichlet
/// ends.
///
/// Row j = 0 is u0. Row j = 1 uses the ghost-eliminated start step
///   u_{i,1} = r^2/2 (u0_{i+1} + u0_{i-1}) + (1 - r^2) u0_i + dt v0_i
///             + dt^2/2 F_{i,0},
/// and later rows the three-level recurrence
///   u_{i,j+1} = r^2 (u_{i+1,j} + u_{i-1,j}) + 2(1 - r^2) u_{i,j}
///               - u_{i,j-1} + dt^2 F_{i,j}.
/// Columns i = 0 and i = M are copied from the boundary data verbatim.
WaveField solve_direct(const GridSpec& grid, const InitialData& initial,
                       const BoundaryData& boundary,
                       const Eigen::MatrixXd& force);

/// Resolves the problem's source (all strengths must be known) and solves.
WaveField solve_direct(const WaveProblem& problem);

/// Second-order one-sided boundary flux at t_1..t_N:
///   Left:  -(4u_{1,j} - u_{2,j} - 3u_{0,j}) / (2dx)
///   Right:  (3u_{M,j} - 4u_{M-1,j} + u_{M-2,j}) / (2dx)
FluxSeries flux(const WaveField& field, BoundaryEnd end);

/// The stencil sums above without the 1/(2dx) factor (and with the Left
/// sign applied), i.e. flux(field, end) * 2dx.
Eigen::VectorXd flux_stencil_sums(const WaveField& field, BoundaryEnd end);

}  // namespace wavesrc
