#include <doctest.h>

#include "wavesrc/errors.hpp"
#include "wavesrc/grid.hpp"

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

TEST_CASE("unit string at r = 1 is accepted") {
  const GridSpec grid = make_grid(1, 1, 80, 80, 1);
  CHECK(grid.courant() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(grid.interior_nodes() == 79);
}

TEST_CASE("derived spacings") {
  const GridSpec grid = make_grid(1, 1, 10, 10, 1);
  CHECK(grid.dx() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(grid.dt() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(grid.courant() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(grid.x(0) == 0.0);
  CHECK(grid.x(10) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(grid.t(3) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("CFL violation") {
  CHECK(code_of([] { make_grid(1, 1, 10, 5, 1); }) ==
        ErrorCode::kCflViolation);
  // Slower waves permit coarser time steps.
  CHECK(make_grid(1, 1, 10, 5, 0.5).courant() ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("invalid dimensions") {
  CHECK(code_of([] { make_grid(1, 1, 1, 10, 1); }) ==
        ErrorCode::kInvalidDimension);
  CHECK(code_of([] { make_grid(1, 1, 10, 0, 1); }) ==
        ErrorCode::kInvalidDimension);
  CHECK(code_of([] { make_grid(0, 1, 10, 10, 1); }) ==
        ErrorCode::kInvalidDimension);
  CHECK(code_of([] { make_grid(1, -1, 10, 10, 1); }) ==
        ErrorCode::kInvalidDimension);
  CHECK(code_of([] { make_grid(1, 1, 10, 10, 0); }) ==
        ErrorCode::kInvalidDimension);
}

TEST_CASE("construction is deterministic") {
  CHECK(make_grid(2.5, 1.5, 30, 40, 1.3) == make_grid(2.5, 1.5, 30, 40, 1.3));
}

TEST_CASE("error codes have stable names") {
  CHECK(to_string(ErrorCode::kCflViolation) == "CFL_VIOLATION");
  CHECK(to_string(ErrorCode::kRankDeficient) == "RANK_DEFICIENT");
}
