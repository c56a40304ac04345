#pragma once

#include <Eigen/Dense>

#include "wavesrc/field.hpp"
#include "wavesrc/inverse_system.hpp"

namespace wavesrc {

/// Tikhonov penalty: order 0 (identity), 1 (first differences) or 2
/// (second differences), weighted by lambda >= 0.
struct RegConfig {
  int order = 0;
  double lambda = 0.0;
};

void validate(const RegConfig& config);

/// Rows (1, -1) for order 1 and (1, -2, 1) for order 2, shifted one column
/// per row; order 0 is the identity. Shape (size - order) x size.
Eigen::MatrixXd difference_operator(int order, Eigen::Index size);

/// Penalty for a system with `blocks` stacked unknown blocks of `block_size`
/// each: block-diagonal copies of difference_operator, so f and g are
/// smoothed independently.
Eigen::MatrixXd penalty_operator(int order, Eigen::Index block_size,
                                 int blocks);

/// argmin ||A x - b||^2 + lambda ||D x||^2, solved as the stacked least
/// squares problem [A; sqrt(lambda) D] x = [b; 0] with column-pivoted QR.
/// lambda == 0 falls back to least_squares(). Throws Error{kSingularSystem}
/// when the stacked matrix is rank deficient.
Eigen::VectorXd tikhonov_solve(const Eigen::MatrixXd& matrix,
                               const Eigen::VectorXd& rhs,
                               const Eigen::MatrixXd& penalty,
                               double lambda);

ForceVector tikhonov_solve(const InverseSystem& system,
                           const RegConfig& config);

/// sv_max / sv_min over min(rows, cols) singular values. Throws
/// Error{kZeroMatrix}. Returns +inf for a singular nonzero matrix.
double condition_number(const Eigen::MatrixXd& matrix);

/// sv(k)/sv(1), k = 1..min(rows, cols); non-increasing, first entry 1.
Eigen::VectorXd normalized_singular_values(const Eigen::MatrixXd& matrix);

/// Euclidean norm of the nodal difference.
double accuracy_error(const ForceVector& numerical, const ForceVector& exact);
double accuracy_error(const Eigen::VectorXd& numerical,
                      const Eigen::VectorXd& exact);

}  // namespace wavesrc
