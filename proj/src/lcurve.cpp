#include "wavesrc/lcurve.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <thread>

#include "wavesrc/csv.hpp"
#include "wavesrc/errors.hpp"
#include "wavesrc/regularization.hpp"

namespace wavesrc {

namespace {

constexpr double kCollinearTolerance = 1e-12;

struct PlanePoint {
  double x;
  double y;
};

std::vector<PlanePoint> project(std::span<const LCurvePoint> points,
                                CurveAxes axes) {
  std::vector<PlanePoint> plane;
  plane.reserve(points.size());
  for (const auto& p : points) {
    if (axes == CurveAxes::kLogLog) {
      plane.push_back({std::log(p.residual_norm), std::log(p.solution_norm)});
    } else {
      plane.push_back({p.residual_norm, p.solution_norm});
    }
  }
  return plane;
}

void check_points(std::span<const LCurvePoint> points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::kDegenerateCurve,
                "corner detection needs at least 3 points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!(p.lambda > 0.0) || !std::isfinite(p.residual_norm) ||
        !std::isfinite(p.solution_norm)) {
      throw Error(ErrorCode::kDegenerateCurve,
                  "L-curve points must have positive lambda and finite norms");
    }
    if (i > 0 && !(p.lambda > points[i - 1].lambda)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "L-curve points must be sorted by ascending lambda");
    }
  }
}

}  // namespace

std::vector<double> lambda_grid(int first_exponent, int last_exponent) {
  std::vector<double> grid;
  for (int e = first_exponent; e <= last_exponent; ++e) {
    const double decade = std::pow(10.0, e);
    grid.push_back(decade);
    grid.push_back(5.0 * decade);
  }
  return grid;
}

std::vector<double> default_lambda_grid() { return lambda_grid(-9, -2); }

std::vector<double> extended_lambda_grid() { return lambda_grid(-9, -1); }

LCurve sweep(const InverseSystem& system, int order,
             std::span<const double> lambdas) {
  if (lambdas.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty lambda grid");
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0) || !std::isfinite(lambdas[i]) ||
        (i > 0 && !(lambdas[i] > lambdas[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lambda grid must be positive and strictly ascending");
    }
  }
  validate(RegConfig{order, 0.0});

  const Eigen::Index block = system.matrix.cols() / system.blocks();
  const Eigen::MatrixXd penalty =
      penalty_operator(order, block, system.blocks());

  std::vector<std::optional<LCurvePoint>> slots(lambdas.size());
  auto solve_one = [&](std::size_t i) {
    try {
      const Eigen::VectorXd f =
          tikhonov_solve(system.matrix, system.rhs, penalty, lambdas[i]);
      slots[i] = LCurvePoint{lambdas[i],
                             (system.matrix * f - system.rhs).norm(),
                             (penalty * f).norm()};
    } catch (const Error&) {
      slots[i].reset();
    }
  };
  {
    const std::size_t workers = std::min<std::size_t>(
        lambdas.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < lambdas.size(); i += workers) solve_one(i);
      });
    }
  }

  LCurve curve;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (slots[i]) {
      curve.points.push_back(*slots[i]);
    } else {
      curve.failed.push_back(lambdas[i]);
    }
  }
  return curve;
}

std::vector<double> curvature(std::span<const LCurvePoint> points,
                              CurveAxes axes) {
  check_points(points);
  const auto plane = project(points, axes);
  const std::size_t n = points.size();
  std::vector<double> kappa(n, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 =
        std::log(points[i].lambda) - std::log(points[i - 1].lambda);
    const double h2 =
        std::log(points[i + 1].lambda) - std::log(points[i].lambda);
    // Weights of the three-point first and second derivatives on an
    // uneven stencil (exact for quadratics).
    const double w1[3] = {-h2 / (h1 * (h1 + h2)), (h2 - h1) / (h1 * h2),
                          h1 / (h2 * (h1 + h2))};
    const double w2[3] = {2.0 / (h1 * (h1 + h2)), -2.0 / (h1 * h2),
                          2.0 / (h2 * (h1 + h2))};
    double dx = 0.0, dy = 0.0, ddx = 0.0, ddy = 0.0;
    for (int s = 0; s < 3; ++s) {
      const auto& p = plane[i - 1 + s];
      dx += w1[s] * p.x;
      dy += w1[s] * p.y;
      ddx += w2[s] * p.x;
      ddy += w2[s] * p.y;
    }
    const double speed2 = dx * dx + dy * dy;
    kappa[i] = speed2 > 0.0 ? (dx * ddy - ddx * dy) / std::pow(speed2, 1.5)
                            : 0.0;
  }
  return kappa;
}

double corner(std::span<const LCurvePoint> points, CurveAxes axes) {
  check_points(points);
  const auto plane = project(points, axes);

  bool collinear = true;
  for (std::size_t i = 1; i + 1 < plane.size() && collinear; ++i) {
    const double ax = plane[i].x - plane[i - 1].x;
    const double ay = plane[i].y - plane[i - 1].y;
    const double bx = plane[i + 1].x - plane[i].x;
    const double by = plane[i + 1].y - plane[i].y;
    const double scale = std::hypot(ax, ay) * std::hypot(bx, by);
    if (std::abs(ax * by - ay * bx) > kCollinearTolerance * scale) {
      collinear = false;
    }
  }
  if (collinear) {
    throw Error(ErrorCode::kDegenerateCurve,
                "L-curve points are collinear; no corner");
  }

  const auto kappa = curvature(points, axes);
  std::size_t best = 1;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (kappa[i] >= kappa[best]) best = i;
  }
  return points[best].lambda;
}

void write_lcurve_csv(std::ostream& out, std::span<const LCurvePoint> points) {
  out << "lambda,residual_norm,solution_norm\n";
  for (const auto& p : points) {
    out << format_double(p.lambda) << ',' << format_double(p.residual_norm)
        << ',' << format_double(p.solution_norm) << '\n';
  }
}

}  // namespace wavesrc
