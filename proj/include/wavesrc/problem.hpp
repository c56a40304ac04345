#pragma once

#include <optional>
#include <variant>

#include <Eigen/Dense>

#include "wavesrc/grid.hpp"

namespace wavesrc {

/// Node samples u0(x_i), v0(x_i), i = 0..M.
struct InitialData {
  Eigen::VectorXd displacement;
  Eigen::VectorXd velocity;

  static InitialData zero(const GridSpec& grid);
};

/// Dirichlet samples P0(t_j) and PL(t_j), j = 0..N.
struct BoundaryData {
  Eigen::VectorXd left;
  Eigen::VectorXd right;

  static BoundaryData zero(const GridSpec& grid);
};

/// Fully known force F(x_i, t_j), sized (M+1) x (N+1).
struct KnownForce {
  Eigen::MatrixXd samples;
};

/// F = f(x) h(x,t). `strength` holds f at the interior nodes x_1..x_{M-1};
/// it is empty while f is the unknown of an inversion.
struct SingleSource {
  Eigen::MatrixXd basis;
  std::optional<Eigen::VectorXd> strength;
};

/// F = f(x) h(x,t) + g(x) theta(x,t).
struct DualSource {
  Eigen::MatrixXd basis_f;
  Eigen::MatrixXd basis_g;
  std::optional<Eigen::VectorXd> strength_f;
  std::optional<Eigen::VectorXd> strength_g;
};

using SourceModel = std::variant<KnownForce, SingleSource, DualSource>;

/// Checks every sampled array in `source` against the grid.
void validate_source(const SourceModel& source, const GridSpec& grid);

/// Expands the source to concrete F(x_i, t_j). Boundary rows (i = 0, M) are
/// zero for the separable variants since f lives on interior nodes only.
/// Throws Error{kInvalidArgument} if an unknown strength is still unset.
Eigen::MatrixXd resolve_force(const SourceModel& source, const GridSpec& grid);

/// Everything needed for one direct solve. make() enforces sample counts
/// and the corner compatibility P0(0) = u0(0), PL(0) = u0(L).
class WaveProblem {
 public:
  static WaveProblem make(const GridSpec& grid, InitialData initial,
                          BoundaryData boundary, SourceModel source);

  const GridSpec& grid() const { return grid_; }
  const InitialData& initial() const { return initial_; }
  const BoundaryData& boundary() const { return boundary_; }
  const SourceModel& source() const { return source_; }

  /// Same data with a different source model (re-validated).
  WaveProblem with_source(SourceModel source) const;

 private:
  WaveProblem(const GridSpec& grid, InitialData initial, BoundaryData boundary,
              SourceModel source)
      : grid_(grid),
        initial_(std::move(initial)),
        boundary_(std::move(boundary)),
        source_(std::move(source)) {}

  GridSpec grid_;
  InitialData initial_;
  BoundaryData boundary_;
  SourceModel source_;
};

inline constexpr double kCompatibilityTolerance = 1e-12;

/// Sample-count checks shared by WaveProblem::make and the raw solver entry.
void validate_initial(const InitialData& initial, const GridSpec& grid);
void validate_boundary(const BoundaryData& boundary, const GridSpec& grid);
void check_compatibility(const InitialData& initial,
                         const BoundaryData& boundary);

}  // namespace wavesrc
