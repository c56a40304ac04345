// Command-line front end: direct solves, inversions, L-curve sweeps and
// reference tables, all written as CSV.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavesrc/errors.hpp"
#include "wavesrc/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw wavesrc::Error(wavesrc::ErrorCode::kIoError,
                         "cannot open config " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-dependent force identification for the 1-D wave "
               "equation"};
  app.set_version_flag("--version", std::string(wavesrc::toolkit_version()));

  std::string command;
  std::string config_path;
  std::optional<int> example, space_cells, time_steps, reg_order, data_refine;
  std::optional<double> length, horizon, wave_speed, noise_pct;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> lambda, lambda_grid, row_units, corner_axes, out;
  std::optional<std::string> u0, v0, p0, pl, force, basis, basis_g, flux_left,
      flux_right;

  app.add_option("command", command, "direct | invert | lcurve | tables")
      ->check(CLI::IsMember({"direct", "invert", "lcurve", "tables"}));
  app.add_option("--config", config_path,
                 "JSON config; flags given on the command line override it")
      ->check(CLI::ExistingFile);
  app.add_option("--example", example, "benchmark id 1..5");
  app.add_option("--M", space_cells, "space subintervals (default 80)");
  app.add_option("--N", time_steps, "time subintervals (default 80)");
  app.add_option("--L", length, "string length (default 1)");
  app.add_option("--T", horizon, "time horizon (default 1)");
  app.add_option("--c", wave_speed, "wave speed (default 1)");
  app.add_option("--noise-pct", noise_pct, "noise level in percent");
  app.add_option("--seed", seed, "noise seed");
  app.add_option("--reg-order", reg_order, "Tikhonov order 0, 1 or 2");
  app.add_option("--lambda", lambda,
                 "regularization parameter, or 'lcurve' for the corner");
  app.add_option("--lambda-grid", lambda_grid,
                 "'default', 'extended' or comma-separated values");
  app.add_option("--row-units", row_units, "stencil (default) | flux")
      ->check(CLI::IsMember({"stencil", "flux"}));
  app.add_option("--corner-axes", corner_axes, "linear (default) | loglog")
      ->check(CLI::IsMember({"linear", "loglog"}));
  app.add_option("--data-refine", data_refine,
                 "generate benchmark flux data on a mesh refined by this factor");
  app.add_option("--out", out, "output directory (default ./out)");
  app.add_option("--u0", u0, "initial displacement, M+1 lines");
  app.add_option("--v0", v0, "initial velocity, M+1 lines");
  app.add_option("--p0", p0, "left Dirichlet data, N+1 lines");
  app.add_option("--pl", pl, "right Dirichlet data, N+1 lines");
  app.add_option("--force", force, "force samples, (M+1)x(N+1) CSV");
  app.add_option("--basis", basis, "known factor h(x,t), (M+1)x(N+1) CSV");
  app.add_option("--basis-g", basis_g, "second factor theta(x,t) (dual source)");
  app.add_option("--flux-left", flux_left, "measured flux at x=0, N lines");
  app.add_option("--flux-right", flux_right, "measured flux at x=L, N lines");

  CLI11_PARSE(app, argc, argv);

  try {
    wavesrc::RunConfig config;
    if (!config_path.empty()) {
      config = wavesrc::config_from_json(slurp(config_path));
    }
    if (!command.empty()) {
      config.command = wavesrc::parse_command(command);
    } else if (config_path.empty()) {
      throw wavesrc::Error(wavesrc::ErrorCode::kInvalidArgument,
                           "missing command");
    }

    // Flags override the config file; reuse its parser for the mapping.
    nlohmann::ordered_json overrides = nlohmann::ordered_json::object();
    auto put = [&overrides](const char* key, const auto& value) {
      if (value) overrides[key] = *value;
    };
    put("example", example);
    put("M", space_cells);
    put("N", time_steps);
    put("L", length);
    put("T", horizon);
    put("c", wave_speed);
    put("noise_pct", noise_pct);
    put("seed", seed);
    put("reg_order", reg_order);
    put("lambda_grid", lambda_grid);
    put("row_units", row_units);
    put("corner_axes", corner_axes);
    put("data_refine", data_refine);
    put("out", out);
    put("u0_file", u0);
    put("v0_file", v0);
    put("p0_file", p0);
    put("pl_file", pl);
    put("force_file", force);
    put("basis_file", basis);
    put("basis_g_file", basis_g);
    put("flux_left_file", flux_left);
    put("flux_right_file", flux_right);
    if (lambda) {
      if (*lambda == "lcurve") {
        overrides["lambda"] = "lcurve";
      } else {
        try {
          std::size_t used = 0;
          overrides["lambda"] = std::stod(*lambda, &used);
          if (used != lambda->size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw wavesrc::Error(wavesrc::ErrorCode::kInvalidArgument,
                               "--lambda must be a number or 'lcurve'");
        }
      }
    }
    config = wavesrc::config_from_json(overrides.dump(), std::move(config));

    wavesrc::run(config, std::cout);
  } catch (const wavesrc::Error& e) {
    std::cerr << "error " << wavesrc::to_string(e.code()) << ": " << e.what()
              << '\n';
    return 2;
  }
  return 0;
}
