#include "wavesrc/benchmarks.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wavesrc/direct_solver.hpp"
#include "wavesrc/errors.hpp"

namespace wavesrc {

namespace {

using std::numbers::pi;

double hat(double x) { return x <= 0.5 ? x : 1.0 - x; }

double lift(double t) { return t + 0.5 * t * t; }

ExampleSpec hat_example(int id, std::function<double(double, double)> h) {
  ExampleSpec spec;
  spec.id = id;
  auto zero = [](double) { return 0.0; };
  spec.initial_displacement = zero;
  spec.initial_velocity = zero;
  spec.left_boundary = zero;
  spec.right_boundary = zero;
  spec.basis_f = std::move(h);
  spec.exact_f = hat;
  return spec;
}

std::array<ExampleSpec, 5> build_specs() {
  std::array<ExampleSpec, 5> specs;

  ExampleSpec& one = specs[0];
  one.id = 1;
  one.initial_displacement = [](double x) { return std::sin(pi * x); };
  one.initial_velocity = [](double) { return 1.0; };
  one.left_boundary = lift;
  one.right_boundary = lift;
  one.basis_f = [](double, double) { return 1.0; };
  one.exact_f = [](double x) { return 1.0 + pi * pi * std::sin(pi * x); };
  one.exact_displacement = [](double x, double t) {
    return std::sin(pi * x) + lift(t);
  };
  one.exact_left_flux = [](double) { return -pi; };
  one.exact_right_flux = [](double) { return -pi; };

  specs[1] = hat_example(2, [](double, double t) { return 1.0 + t; });
  specs[2] = hat_example(3, [](double x, double t) { return 1.0 + x + t; });
  specs[3] = hat_example(4, [](double, double t) { return t * t; });

  ExampleSpec& five = specs[4];
  five.id = 5;
  five.initial_displacement = [](double x) { return std::sin(pi * x); };
  five.initial_velocity = [](double x) { return x * x + 1.0; };
  five.left_boundary = lift;
  five.right_boundary = [](double t) { return 2.0 * t + 0.5 * t * t; };
  five.basis_f = [](double, double) { return 1.0; };
  five.basis_g = [](double, double t) { return t; };
  five.exact_f = one.exact_f;
  five.exact_g = [](double) { return -2.0; };
  five.exact_displacement = [](double x, double t) {
    return x * x * t + std::sin(pi * x) + lift(t);
  };
  five.exact_left_flux = [](double) { return -pi; };
  five.exact_right_flux = [](double t) { return 2.0 * t - pi; };
  return specs;
}

Eigen::VectorXd sample_interior(const GridSpec& grid,
                                const std::function<double(double)>& fn) {
  Eigen::VectorXd v(grid.interior_nodes());
  for (int i = 1; i < grid.space_cells(); ++i) v(i - 1) = fn(grid.x(i));
  return v;
}

void require_unit_string(const GridSpec& grid) {
  if (grid.length() != 1.0 || grid.wave_speed() != 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "benchmark examples are defined for L = c = 1");
  }
}

}  // namespace

const ExampleSpec& example_spec(int id) {
  static const std::array<ExampleSpec, 5> specs = build_specs();
  if (id < 1 || id > 5) {
    throw Error(ErrorCode::kUnknownExample,
                "unknown example " + std::to_string(id) + " (expected 1..5)");
  }
  return specs[id - 1];
}

Eigen::VectorXd sample_space(const GridSpec& grid,
                             const std::function<double(double)>& fn) {
  Eigen::VectorXd v(grid.space_cells() + 1);
  for (int i = 0; i <= grid.space_cells(); ++i) v(i) = fn(grid.x(i));
  return v;
}

Eigen::VectorXd sample_time(const GridSpec& grid,
                            const std::function<double(double)>& fn) {
  Eigen::VectorXd v(grid.time_steps() + 1);
  for (int j = 0; j <= grid.time_steps(); ++j) v(j) = fn(grid.t(j));
  return v;
}

Eigen::MatrixXd sample_mesh(const GridSpec& grid,
                            const std::function<double(double, double)>& fn) {
  Eigen::MatrixXd m(grid.space_cells() + 1, grid.time_steps() + 1);
  for (int j = 0; j <= grid.time_steps(); ++j) {
    for (int i = 0; i <= grid.space_cells(); ++i) m(i, j) = fn(grid.x(i), grid.t(j));
  }
  return m;
}

const Eigen::MatrixXd& Example::basis_f() const {
  if (const auto* single = std::get_if<SingleSource>(&problem.source())) {
    return single->basis;
  }
  return std::get<DualSource>(problem.source()).basis_f;
}

const Eigen::MatrixXd& Example::basis_g() const {
  if (!dual()) {
    throw Error(ErrorCode::kInvalidArgument,
                "example has no second source basis");
  }
  return std::get<DualSource>(problem.source()).basis_g;
}

SourceModel Example::unknown_source() const {
  if (dual()) return DualSource{basis_f(), basis_g(), std::nullopt, std::nullopt};
  return SingleSource{basis_f(), std::nullopt};
}

Example make_example(int id, const GridSpec& grid) {
  const ExampleSpec& spec = example_spec(id);
  require_unit_string(grid);

  InitialData initial{sample_space(grid, spec.initial_displacement),
                      sample_space(grid, spec.initial_velocity)};
  BoundaryData boundary{sample_time(grid, spec.left_boundary),
                        sample_time(grid, spec.right_boundary)};

  const Eigen::VectorXd f = sample_interior(grid, spec.exact_f);
  if (spec.basis_g) {
    const Eigen::VectorXd g = sample_interior(grid, spec.exact_g);
    Eigen::VectorXd stacked(2 * f.size());
    stacked << f, g;
    return {id,
            WaveProblem::make(grid, std::move(initial), std::move(boundary),
                              DualSource{sample_mesh(grid, spec.basis_f),
                                         sample_mesh(grid, spec.basis_g), f,
                                         g}),
            {stacked, 2}};
  }
  return {id,
          WaveProblem::make(grid, std::move(initial), std::move(boundary),
                            SingleSource{sample_mesh(grid, spec.basis_f), f}),
          {f, 1}};
}

FluxSeries measured_flux(int id, const GridSpec& grid, BoundaryEnd end,
                         int refine) {
  const ExampleSpec& spec = example_spec(id);
  require_unit_string(grid);
  if (refine < 1) {
    throw Error(ErrorCode::kInvalidArgument, "refinement factor must be >= 1");
  }

  const auto& analytic = end == BoundaryEnd::kLeft ? spec.exact_left_flux
                                                   : spec.exact_right_flux;
  FluxSeries series{end, Eigen::VectorXd(grid.time_steps())};
  if (analytic) {
    for (int j = 1; j <= grid.time_steps(); ++j) {
      series.values(j - 1) = analytic(grid.t(j));
    }
    return series;
  }

  const GridSpec fine =
      make_grid(grid.length(), grid.horizon(), grid.space_cells() * refine,
                grid.time_steps() * refine, grid.wave_speed());
  const FluxSeries fine_flux =
      flux(solve_direct(make_example(id, fine).problem), end);
  for (int j = 1; j <= grid.time_steps(); ++j) {
    series.values(j - 1) = fine_flux.values(j * refine - 1);
  }
  return series;
}

double reference_lambda(int example_id, int order, int noise_index) {
  static constexpr double table[3][3][3] = {
      {{1e-6, 1e-5, 1e-5}, {1e-4, 1e-4, 1e-3}, {1e-3, 1e-1, 1e-1}},
      {{1e-5, 1e-5, 1e-5}, {1e-4, 1e-3, 1e-3}, {1e-3, 1e-1, 1e-1}},
      {{1e-8, 1e-8, 1e-8}, {1e-6, 1e-6, 1e-5}, {1e-5, 1e-4, 1e-4}},
  };
  if (example_id < 2 || example_id > 4) {
    throw Error(ErrorCode::kUnknownExample,
                "reference parameters exist for examples 2-4 only");
  }
  if (order < 0 || order > 2 || noise_index < 0 || noise_index > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "order and noise index must be in 0..2");
  }
  return table[example_id - 2][order][noise_index];
}

}  // namespace wavesrc
