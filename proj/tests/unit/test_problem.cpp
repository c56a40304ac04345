#include <doctest.h>

#include "wavesrc/errors.hpp"
#include "wavesrc/problem.hpp"

using namespace wavesrc;

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

TEST_CASE("compatibility at the corners is enforced") {
  const GridSpec grid = make_grid(1, 1, 4, 4, 1);
  InitialData initial = InitialData::zero(grid);
  BoundaryData boundary = BoundaryData::zero(grid);
  const KnownForce none{Eigen::MatrixXd::Zero(5, 5)};

  CHECK_NOTHROW(WaveProblem::make(grid, initial, boundary, none));

  boundary.right(0) = 1e-9;
  CHECK(code_of([&] { WaveProblem::make(grid, initial, boundary, none); }) ==
        ErrorCode::kIncompatibleData);

  initial.displacement(4) = 1e-9 + 5e-13;
  CHECK_NOTHROW(WaveProblem::make(grid, initial, boundary, none));
}

TEST_CASE("sample counts are checked") {
  const GridSpec grid = make_grid(1, 1, 4, 4, 1);
  InitialData initial = InitialData::zero(grid);
  initial.velocity.resize(4);
  CHECK(code_of([&] {
          WaveProblem::make(grid, initial, BoundaryData::zero(grid),
                            KnownForce{Eigen::MatrixXd::Zero(5, 5)});
        }) == ErrorCode::kDimensionMismatch);

  CHECK(code_of([&] {
          WaveProblem::make(grid, InitialData::zero(grid),
                            BoundaryData::zero(grid),
                            SingleSource{Eigen::MatrixXd::Ones(5, 5),
                                         Eigen::VectorXd::Ones(4)});
        }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("separable sources resolve to f(x) h(x,t) on interior rows") {
  const GridSpec grid = make_grid(1, 1, 4, 3, 0.5);
  Eigen::MatrixXd h(5, 4);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 4; ++j) h(i, j) = 1.0 + i + 10.0 * j;
  }
  const Eigen::VectorXd f = Eigen::Vector3d(2.0, -1.0, 0.5);

  const Eigen::MatrixXd single = resolve_force(SingleSource{h, f}, grid);
  CHECK(single.row(0).isZero());
  CHECK(single.row(4).isZero());
  CHECK(single(2, 3) == -1.0 * h(2, 3));

  const Eigen::MatrixXd theta = Eigen::MatrixXd::Constant(5, 4, 3.0);
  const Eigen::VectorXd g = Eigen::Vector3d(1.0, 1.0, -2.0);
  const Eigen::MatrixXd dual = resolve_force(DualSource{h, theta, f, g}, grid);
  CHECK(dual(3, 1) == doctest::Approx(0.5 * h(3, 1) - 6.0));
}

TEST_CASE("resolving an unknown strength is an error") {
  const GridSpec grid = make_grid(1, 1, 4, 4, 1);
  CHECK(code_of([&] {
          resolve_force(SingleSource{Eigen::MatrixXd::Ones(5, 5), std::nullopt},
                        grid);
        }) == ErrorCode::kInvalidArgument);
}
