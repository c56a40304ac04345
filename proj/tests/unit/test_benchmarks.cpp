#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wavesrc/benchmarks.hpp"
#include "wavesrc/direct_solver.hpp"
#include "wavesrc/errors.hpp"

using namespace wavesrc;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected wavesrc::Error");
  return ErrorCode::kIoError;
}

}  // namespace

TEST_CASE("closed-form data") {
  const ExampleSpec& one = example_spec(1);
  CHECK(one.exact_left_flux(0.37) == -pi);
  CHECK(one.exact_f(0.5) == doctest::Approx(1 + pi * pi));

  for (int id : {2, 3, 4}) {
    const ExampleSpec& spec = example_spec(id);
    CHECK(spec.exact_f(0.5) == 0.5);
    CHECK(spec.exact_f(0.25) == 0.25);
    CHECK(spec.exact_f(0.75) == 0.25);
    CHECK(!spec.exact_left_flux);
  }

  const ExampleSpec& five = example_spec(5);
  CHECK(five.exact_g(0.3) == -2.0);
  CHECK(five.exact_right_flux(0.5) == doctest::Approx(1.0 - pi));
}

TEST_CASE("Example 5 closed form agrees with its own data") {
  const ExampleSpec& five = example_spec(5);
  for (double x : {0.0, 0.2, 0.7, 1.0}) {
    CHECK(five.exact_displacement(x, 0.0) == five.initial_displacement(x));
  }
  for (double t : {0.0, 0.3, 1.0}) {
    CHECK(five.exact_displacement(0.0, t) == five.left_boundary(t));
    // sin(pi) is not exactly zero in floating point.
    CHECK(std::abs(five.exact_displacement(1.0, t) - five.right_boundary(t)) <=
          1e-15);
  }
}

TEST_CASE("Example 2 simulated flux matches the reference table") {
  const GridSpec grid = make_grid(1, 1, 80, 80, 1);
  const FluxSeries q = measured_flux(2, grid, BoundaryEnd::kLeft);
  CHECK(q.values.size() == 80);
  CHECK(std::abs(q.values(79) - -0.37523) <= 5e-5);
  CHECK(std::abs(q.values(7) - -0.00516) <= 5e-5);
}

TEST_CASE("Example 4 flux converges under refinement") {
  const FluxSeries fine =
      measured_flux(4, make_grid(1, 1, 80, 80, 1), BoundaryEnd::kLeft);
  double previous = INFINITY;
  for (int m : {5, 10, 20, 40}) {
    const FluxSeries q =
        measured_flux(4, make_grid(1, 1, m, m, 1), BoundaryEnd::kLeft);
    const int stride = 80 / m;
    double gap = 0.0;
    for (int j = 1; j <= m; ++j) {
      gap = std::max(gap, std::abs(q.values(j - 1) - fine.values(j * stride - 1)));
    }
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("refined data generation samples the fine mesh") {
  const GridSpec grid = make_grid(1, 1, 20, 20, 1);
  const FluxSeries same = measured_flux(3, grid, BoundaryEnd::kLeft, 1);
  const FluxSeries refined = measured_flux(3, grid, BoundaryEnd::kLeft, 4);
  const FluxSeries direct =
      measured_flux(3, make_grid(1, 1, 80, 80, 1), BoundaryEnd::kLeft);
  CHECK(refined.values.size() == 20);
  CHECK(refined.values != same.values);
  CHECK(refined.values(19) == direct.values(79));
  CHECK(code_of([&] { measured_flux(3, grid, BoundaryEnd::kLeft, 0); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("problem assembly") {
  const GridSpec grid = make_grid(1, 0.5, 10, 10, 1);
  const Example two = make_example(2, grid);
  CHECK(!two.dual());
  CHECK(two.exact_force.values.size() == 9);
  CHECK(two.basis_f()(3, 10) == doctest::Approx(1.5));
  CHECK(std::holds_alternative<SingleSource>(two.unknown_source()));
  CHECK(!std::get<SingleSource>(two.unknown_source()).strength);

  const Example five = make_example(5, make_grid(1, 1, 10, 10, 1));
  CHECK(five.dual());
  CHECK(five.exact_force.g().isConstant(-2.0));
  CHECK(five.basis_g()(4, 5) == doctest::Approx(0.5));
}

TEST_CASE("errors") {
  CHECK(code_of([] { example_spec(6); }) == ErrorCode::kUnknownExample);
  CHECK(code_of([] { make_example(0, make_grid(1, 1, 10, 10, 1)); }) ==
        ErrorCode::kUnknownExample);
  CHECK(code_of([] { make_example(1, make_grid(2, 1, 10, 10, 1)); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { make_example(2, make_grid(1, 1, 10, 10, 1)).basis_g(); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { reference_lambda(1, 0, 0); }) ==
        ErrorCode::kUnknownExample);
  CHECK(reference_lambda(2, 2, 0) == 1e-3);
  CHECK(reference_lambda(4, 0, 2) == 1e-8);
}
