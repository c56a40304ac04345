#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "wavesrc/inverse_system.hpp"

namespace wavesrc {

struct LCurvePoint {
  double lambda = 0.0;
  double residual_norm = 0.0;  ///< ||A f - b||
  double solution_norm = 0.0;  ///< ||D_k f||
};

struct LCurve {
  std::vector<LCurvePoint> points;
  /// lambdas whose solve failed; they are absent from `points`.
  std::vector<double> failed;
};

/// {1, 5} x 10^e for e = first_exponent..last_exponent, ascending.
std::vector<double> lambda_grid(int first_exponent, int last_exponent);

/// e = -9..-2.
std::vector<double> default_lambda_grid();

/// e = -9..-1; reaches the larger parameters first/second order need.
std::vector<double> extended_lambda_grid();

/// One Tikhonov solve per lambda. `lambdas` must be nonempty, positive and
/// strictly ascending (Error{kInvalidArgument} otherwise).
LCurve sweep(const InverseSystem& system, int order,
             std::span<const double> lambdas);

/// Coordinates the corner detector measures curvature in.
enum class CurveAxes {
  /// (residual_norm, solution_norm) as is.
  kLinear,
  /// (log residual_norm, log solution_norm).
  kLogLog,
};

/// Signed curvature of the curve parametrised by log(lambda), one value per
/// point; the two end points get NaN. Three-point centered differences on
/// the (generally non-uniform) log(lambda) spacing.
std::vector<double> curvature(std::span<const LCurvePoint> points,
                              CurveAxes axes);

/// lambda of the interior point with the largest signed curvature, i.e.
/// the sharpest turn from the steep (under-regularized) branch onto the
/// flat (over-regularized) one. Ties go to the larger lambda.
/// Throws Error{kDegenerateCurve} for fewer than 3 points or when all
/// points are collinear in `axes` within 1e-12.
double corner(std::span<const LCurvePoint> points,
              CurveAxes axes = CurveAxes::kLinear);

/// Header "lambda,residual_norm,solution_norm", one point per row.
void write_lcurve_csv(std::ostream& out, std::span<const LCurvePoint> points);

}  // namespace wavesrc
