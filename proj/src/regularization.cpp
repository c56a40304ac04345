#include "wavesrc/regularization.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wavesrc/errors.hpp"

namespace wavesrc {

namespace {

Eigen::VectorXd singular_values(const Eigen::MatrixXd& matrix) {
  if (matrix.size() == 0 || matrix.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorCode::kZeroMatrix, "matrix is empty or identically zero");
  }
  return Eigen::JacobiSVD<Eigen::MatrixXd>(matrix).singularValues();
}

}  // namespace

void validate(const RegConfig& config) {
  if (config.order < 0 || config.order > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "regularization order must be 0, 1 or 2");
  }
  if (!(config.lambda >= 0.0) || !std::isfinite(config.lambda)) {
    throw Error(ErrorCode::kInvalidArgument,
                "regularization parameter must be finite and >= 0");
  }
}

Eigen::MatrixXd difference_operator(int order, Eigen::Index size) {
  if (order < 0 || order > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "difference order must be 0, 1 or 2");
  }
  if (size <= order) {
    std::ostringstream msg;
    msg << "order-" << order << " differences need more than " << order
        << " nodes, got " << size;
    throw Error(ErrorCode::kInvalidDimension, msg.str());
  }
  if (order == 0) return Eigen::MatrixXd::Identity(size, size);

  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(size - order, size);
  for (Eigen::Index row = 0; row < op.rows(); ++row) {
    if (order == 1) {
      op(row, row) = 1.0;
      op(row, row + 1) = -1.0;
    } else {
      op(row, row) = 1.0;
      op(row, row + 1) = -2.0;
      op(row, row + 2) = 1.0;
    }
  }
  return op;
}

Eigen::MatrixXd penalty_operator(int order, Eigen::Index block_size,
                                 int blocks) {
  const Eigen::MatrixXd block = difference_operator(order, block_size);
  Eigen::MatrixXd op =
      Eigen::MatrixXd::Zero(blocks * block.rows(), blocks * block.cols());
  for (int b = 0; b < blocks; ++b) {
    op.block(b * block.rows(), b * block.cols(), block.rows(), block.cols()) =
        block;
  }
  return op;
}

Eigen::VectorXd tikhonov_solve(const Eigen::MatrixXd& matrix,
                               const Eigen::VectorXd& rhs,
                               const Eigen::MatrixXd& penalty,
                               double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument,
                "regularization parameter must be finite and >= 0");
  }
  if (matrix.rows() != rhs.size() || penalty.cols() != matrix.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "system, right-hand side and penalty disagree in size");
  }
  if (lambda == 0.0) {
    try {
      return least_squares(matrix, rhs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRankDeficient) throw;
      throw Error(ErrorCode::kSingularSystem,
                  std::string("unregularized solve: ") + e.what());
    }
  }

  const Eigen::Index rows = matrix.rows() + penalty.rows();
  Eigen::MatrixXd stacked(rows, matrix.cols());
  stacked << matrix, std::sqrt(lambda) * penalty;
  Eigen::VectorXd stacked_rhs = Eigen::VectorXd::Zero(rows);
  stacked_rhs.head(rhs.size()) = rhs;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stacked);
  if (qr.rank() < stacked.cols()) {
    throw Error(ErrorCode::kSingularSystem,
                "regularized system is rank deficient");
  }
  return qr.solve(stacked_rhs);
}

ForceVector tikhonov_solve(const InverseSystem& system,
                           const RegConfig& config) {
  validate(config);
  const Eigen::Index block = system.matrix.cols() / system.blocks();
  return {tikhonov_solve(system.matrix, system.rhs,
                         penalty_operator(config.order, block,
                                          system.blocks()),
                         config.lambda),
          system.blocks()};
}

double condition_number(const Eigen::MatrixXd& matrix) {
  const Eigen::VectorXd sv = singular_values(matrix);
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

Eigen::VectorXd normalized_singular_values(const Eigen::MatrixXd& matrix) {
  const Eigen::VectorXd sv = singular_values(matrix);
  return sv / sv(0);
}

double accuracy_error(const Eigen::VectorXd& numerical,
                      const Eigen::VectorXd& exact) {
  if (numerical.size() != exact.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "force vectors differ in length");
  }
  return (numerical - exact).norm();
}

double accuracy_error(const ForceVector& numerical, const ForceVector& exact) {
  return accuracy_error(numerical.values, exact.values);
}

}  // namespace wavesrc
