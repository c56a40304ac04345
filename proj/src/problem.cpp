#include "wavesrc/problem.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "wavesrc/errors.hpp"

namespace wavesrc {

namespace {

void expect_size(Eigen::Index actual, Eigen::Index expected,
                 const char* what) {
  if (actual != expected) {
    std::ostringstream msg;
    msg << what << ": expected " << expected << " samples, got " << actual;
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
}

void expect_mesh(const Eigen::MatrixXd& samples, const GridSpec& grid,
                 const char* what) {
  if (samples.rows() != grid.space_cells() + 1 ||
      samples.cols() != grid.time_steps() + 1) {
    std::ostringstream msg;
    msg << what << ": expected " << grid.space_cells() + 1 << "x"
        << grid.time_steps() + 1 << " samples, got " << samples.rows() << "x"
        << samples.cols();
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
}

void expect_strength(const std::optional<Eigen::VectorXd>& strength,
                     const GridSpec& grid, const char* what) {
  if (strength) expect_size(strength->size(), grid.interior_nodes(), what);
}

Eigen::MatrixXd separable(const Eigen::MatrixXd& basis,
                          const std::optional<Eigen::VectorXd>& strength,
                          const char* name) {
  if (!strength) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("force strength ") + name + " is unknown");
  }
  Eigen::MatrixXd force = Eigen::MatrixXd::Zero(basis.rows(), basis.cols());
  const Eigen::Index interior = strength->size();
  force.middleRows(1, interior) =
      strength->asDiagonal() * basis.middleRows(1, interior);
  return force;
}

}  // namespace

InitialData InitialData::zero(const GridSpec& grid) {
  const int nodes = grid.space_cells() + 1;
  return {Eigen::VectorXd::Zero(nodes), Eigen::VectorXd::Zero(nodes)};
}

BoundaryData BoundaryData::zero(const GridSpec& grid) {
  const int levels = grid.time_steps() + 1;
  return {Eigen::VectorXd::Zero(levels), Eigen::VectorXd::Zero(levels)};
}

void validate_initial(const InitialData& initial, const GridSpec& grid) {
  expect_size(initial.displacement.size(), grid.space_cells() + 1,
              "initial displacement");
  expect_size(initial.velocity.size(), grid.space_cells() + 1,
              "initial velocity");
}

void validate_boundary(const BoundaryData& boundary, const GridSpec& grid) {
  expect_size(boundary.left.size(), grid.time_steps() + 1, "left boundary");
  expect_size(boundary.right.size(), grid.time_steps() + 1, "right boundary");
}

void check_compatibility(const InitialData& initial,
                         const BoundaryData& boundary) {
  const Eigen::Index last = initial.displacement.size() - 1;
  const double left_gap =
      std::abs(boundary.left(0) - initial.displacement(0));
  const double right_gap =
      std::abs(boundary.right(0) - initial.displacement(last));
  if (left_gap > kCompatibilityTolerance ||
      right_gap > kCompatibilityTolerance) {
    std::ostringstream msg;
    msg << "boundary data incompatible with initial displacement at t=0 "
        << "(left gap " << left_gap << ", right gap " << right_gap << ")";
    throw Error(ErrorCode::kIncompatibleData, msg.str());
  }
}

void validate_source(const SourceModel& source, const GridSpec& grid) {
  if (const auto* known = std::get_if<KnownForce>(&source)) {
    expect_mesh(known->samples, grid, "force");
  } else if (const auto* single = std::get_if<SingleSource>(&source)) {
    expect_mesh(single->basis, grid, "source basis");
    expect_strength(single->strength, grid, "source strength");
  } else {
    const auto& dual = std::get<DualSource>(source);
    expect_mesh(dual.basis_f, grid, "first source basis");
    expect_mesh(dual.basis_g, grid, "second source basis");
    expect_strength(dual.strength_f, grid, "first source strength");
    expect_strength(dual.strength_g, grid, "second source strength");
  }
}

Eigen::MatrixXd resolve_force(const SourceModel& source,
                              const GridSpec& grid) {
  validate_source(source, grid);
  if (const auto* known = std::get_if<KnownForce>(&source)) {
    return known->samples;
  }
  if (const auto* single = std::get_if<SingleSource>(&source)) {
    return separable(single->basis, single->strength, "f");
  }
  const auto& dual = std::get<DualSource>(source);
  return separable(dual.basis_f, dual.strength_f, "f") +
         separable(dual.basis_g, dual.strength_g, "g");
}

WaveProblem WaveProblem::make(const GridSpec& grid, InitialData initial,
                              BoundaryData boundary, SourceModel source) {
  validate_initial(initial, grid);
  validate_boundary(boundary, grid);
  check_compatibility(initial, boundary);
  validate_source(source, grid);
  return WaveProblem(grid, std::move(initial), std::move(boundary),
                     std::move(source));
}

WaveProblem WaveProblem::with_source(SourceModel source) const {
  validate_source(source, grid_);
  return WaveProblem(grid_, initial_, boundary_, std::move(source));
}

}  // namespace wavesrc
