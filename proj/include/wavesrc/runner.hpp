#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wavesrc/inverse_system.hpp"
#include "wavesrc/lcurve.hpp"

namespace wavesrc {

enum class Command { kDirect, kInvert, kLCurve, kTables };

/// Files for runs on user data instead of a benchmark. Node samples are one
/// value per line (u0, v0: M+1 lines; P0, PL: N+1 lines; fluxes: N lines,
/// t_1..t_N). Mesh samples are CSV with M+1 rows of N+1 values. Missing
/// initial/boundary files mean zero data.
struct ExternalData {
  std::optional<std::filesystem::path> initial_displacement;
  std::optional<std::filesystem::path> initial_velocity;
  std::optional<std::filesystem::path> left_boundary;
  std::optional<std::filesystem::path> right_boundary;
  std::optional<std::filesystem::path> force;    ///< direct only
  std::optional<std::filesystem::path> basis_f;  ///< invert / lcurve
  std::optional<std::filesystem::path> basis_g;  ///< dual-source
  std::optional<std::filesystem::path> flux_left;
  std::optional<std::filesystem::path> flux_right;  ///< dual-source
};

struct RunConfig {
  Command command = Command::kDirect;
  std::optional<int> example;
  ExternalData external;

  double length = 1.0;
  double horizon = 1.0;
  double wave_speed = 1.0;
  int space_cells = 80;
  int time_steps = 80;

  double noise_pct = 0.0;  ///< percent, 1.0 == 1%
  std::uint64_t seed = 0;

  int reg_order = 0;
  /// Fixed lambda; empty means "pick the L-curve corner" for invert.
  std::optional<double> lambda = 0.0;
  std::vector<double> lambda_grid = default_lambda_grid();

  RowUnits row_units = RowUnits::kStencil;
  CurveAxes corner_axes = CurveAxes::kLinear;
  /// Benchmarks 2-4 only: generate flux data on a mesh refined by this
  /// factor. 1 reproduces same-mesh synthetic data.
  int data_refine = 1;

  std::filesystem::path out = "out";
};

std::string_view to_string(Command command);
Command parse_command(std::string_view name);

/// Accepts "default", "extended" or a comma-separated list of numbers.
std::vector<double> parse_lambda_grid(std::string_view text);

/// Serialized form used for config files and run manifests (JSON object).
std::string config_to_json(const RunConfig& config);
/// Keys mirror the CLI flags: command, example, M, N, L, T, c, noise_pct,
/// seed, reg_order, lambda (number or "lcurve"), lambda_grid, row_units,
/// corner_axes, data_refine, out, and the external file keys. Keys that are
/// absent keep the values already in `base`.
RunConfig config_from_json(std::string_view json, RunConfig base = {});

/// Checks mutual consistency (Error{kInvalidArgument}).
void validate(const RunConfig& config);

/// Executes one command, writing CSV artifacts and manifest.json into
/// config.out. Short progress lines go to `log`. Throws wavesrc::Error.
void run(const RunConfig& config, std::ostream& log);

/// Toolkit version string recorded in manifests.
std::string_view toolkit_version();

}  // namespace wavesrc
