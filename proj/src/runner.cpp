#include "wavesrc/runner.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wavesrc/benchmarks.hpp"
#include "wavesrc/csv.hpp"
#include "wavesrc/direct_solver.hpp"
#include "wavesrc/errors.hpp"
#include "wavesrc/noise.hpp"
#include "wavesrc/regularization.hpp"

#ifndef WAVESRC_VERSION
#define WAVESRC_VERSION "0.0.0"
#endif

namespace wavesrc {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kTableGrids[] = {10, 20, 40, 80};
constexpr double kTableTimes[] = {0.1, 0.2, 0.8, 0.9, 1.0};

void write_file(const fs::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  body(out);
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

void write_metrics(const fs::path& path,
                   const std::vector<std::pair<std::string, std::string>>& kv) {
  write_file(path, [&](std::ostream& out) {
    out << "metric,value\n";
    for (const auto& [key, value] : kv) out << key << ',' << value << '\n';
  });
}

std::string fmt(double v) { return format_double(v); }

GridSpec grid_of(const RunConfig& config) {
  return make_grid(config.length, config.horizon, config.space_cells,
                   config.time_steps, config.wave_speed);
}

Eigen::VectorXd column_or_zero(const std::optional<fs::path>& path,
                               Eigen::Index size, const char* what) {
  if (!path) return Eigen::VectorXd::Zero(size);
  Eigen::VectorXd v = read_column(*path);
  if (v.size() != size) {
    std::ostringstream msg;
    msg << what << " (" << path->string() << "): expected " << size
        << " values, got " << v.size();
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
  return v;
}

Eigen::MatrixXd mesh_file(const fs::path& path, const GridSpec& grid,
                          const char* what) {
  Eigen::MatrixXd m = read_matrix_csv(path);
  if (m.rows() != grid.space_cells() + 1 ||
      m.cols() != grid.time_steps() + 1) {
    std::ostringstream msg;
    msg << what << " (" << path.string() << "): expected "
        << grid.space_cells() + 1 << "x" << grid.time_steps() + 1
        << " values, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
  return m;
}

InitialData external_initial(const ExternalData& ext, const GridSpec& grid) {
  const Eigen::Index nodes = grid.space_cells() + 1;
  return {column_or_zero(ext.initial_displacement, nodes,
                         "initial displacement"),
          column_or_zero(ext.initial_velocity, nodes, "initial velocity")};
}

BoundaryData external_boundary(const ExternalData& ext, const GridSpec& grid) {
  const Eigen::Index levels = grid.time_steps() + 1;
  return {column_or_zero(ext.left_boundary, levels, "left boundary"),
          column_or_zero(ext.right_boundary, levels, "right boundary")};
}

FluxSeries external_flux(const fs::path& path, const GridSpec& grid,
                         BoundaryEnd end) {
  return {end, column_or_zero(path, grid.time_steps(), "measured flux")};
}

struct PreparedInversion {
  InverseSystem system;
  std::optional<ForceVector> exact;
};

InverseSystem assemble_for(const RunConfig& config, const GridSpec& grid,
                           const InitialData& initial,
                           const BoundaryData& boundary,
                           const Eigen::MatrixXd& basis_f,
                           const std::optional<Eigen::MatrixXd>& basis_g,
                           const FluxSeries& left,
                           const std::optional<FluxSeries>& right) {
  if (basis_g) {
    return assemble_dual(grid, initial, boundary, basis_f, *basis_g, left,
                         *right, config.row_units);
  }
  return assemble_single(grid, initial, boundary, basis_f, left,
                         config.row_units);
}

PreparedInversion prepare_inversion(const RunConfig& config) {
  const GridSpec grid = grid_of(config);
  const NoiseSpec noise{config.noise_pct / 100.0, config.seed};

  if (config.example) {
    const Example ex = make_example(*config.example, grid);
    const FluxSeries left = add_noise(
        measured_flux(ex.id, grid, BoundaryEnd::kLeft, config.data_refine),
        noise);
    std::optional<Eigen::MatrixXd> basis_g;
    std::optional<FluxSeries> right;
    if (ex.dual()) {
      basis_g = ex.basis_g();
      right = add_noise(
          measured_flux(ex.id, grid, BoundaryEnd::kRight, config.data_refine),
          noise);
    }
    PreparedInversion prepared{
        assemble_for(config, grid, ex.problem.initial(), ex.problem.boundary(),
                     ex.basis_f(), basis_g, left, right),
        ex.exact_force};
    prepared.system.noise = noise;
    return prepared;
  }

  const ExternalData& ext = config.external;
  const InitialData initial = external_initial(ext, grid);
  const BoundaryData boundary = external_boundary(ext, grid);
  check_compatibility(initial, boundary);
  const FluxSeries left =
      add_noise(external_flux(*ext.flux_left, grid, BoundaryEnd::kLeft), noise);
  std::optional<Eigen::MatrixXd> basis_g;
  std::optional<FluxSeries> right;
  if (ext.basis_g) {
    basis_g = mesh_file(*ext.basis_g, grid, "second basis");
    right = add_noise(external_flux(*ext.flux_right, grid, BoundaryEnd::kRight),
                      noise);
  }
  PreparedInversion prepared{
      assemble_for(config, grid, initial, boundary,
                   mesh_file(*ext.basis_f, grid, "basis"), basis_g, left,
                   right),
      std::nullopt};
  prepared.system.noise = noise;
  return prepared;
}

void run_direct(const RunConfig& config, std::ostream& log) {
  const GridSpec grid = grid_of(config);
  std::optional<Example> example;
  std::optional<WaveProblem> problem;
  if (config.example) {
    example = make_example(*config.example, grid);
    problem = example->problem;
  } else {
    const ExternalData& ext = config.external;
    const Eigen::MatrixXd force =
        ext.force ? mesh_file(*ext.force, grid, "force")
                  : Eigen::MatrixXd::Zero(grid.space_cells() + 1,
                                          grid.time_steps() + 1);
    problem = WaveProblem::make(grid, external_initial(ext, grid),
                                external_boundary(ext, grid),
                                KnownForce{force});
  }

  const WaveField field = solve_direct(*problem);
  const FluxSeries left = flux(field, BoundaryEnd::kLeft);
  const FluxSeries right = flux(field, BoundaryEnd::kRight);

  write_file(config.out / "field.csv",
             [&](std::ostream& out) { write_matrix_csv(out, field.u); });
  write_file(config.out / "flux_left.csv",
             [&](std::ostream& out) { write_matrix_csv(out, left.values); });
  write_file(config.out / "flux_right.csv",
             [&](std::ostream& out) { write_matrix_csv(out, right.values); });

  std::vector<std::pair<std::string, std::string>> metrics = {
      {"courant", fmt(grid.courant())},
  };
  if (example) {
    const auto& exact = example_spec(example->id).exact_displacement;
    if (exact) {
      double worst = 0.0;
      for (int j = 0; j <= grid.time_steps(); ++j) {
        for (int i = 0; i <= grid.space_cells(); ++i) {
          worst = std::max(worst,
                           std::abs(field.u(i, j) - exact(grid.x(i), grid.t(j))));
        }
      }
      metrics.emplace_back("max_abs_displacement_error", fmt(worst));
      log << "max |u - u_exact| = " << worst << '\n';
    }
  }
  write_metrics(config.out / "metrics.csv", metrics);
  log << "direct: wrote field.csv, flux_left.csv, flux_right.csv\n";
}

void run_invert(const RunConfig& config, std::ostream& log) {
  const PreparedInversion prepared = prepare_inversion(config);
  const InverseSystem& system = prepared.system;

  double lambda = 0.0;
  if (config.lambda) {
    lambda = *config.lambda;
  } else {
    const LCurve curve = sweep(system, config.reg_order, config.lambda_grid);
    lambda = corner(curve.points, config.corner_axes);
    log << "L-curve corner at lambda = " << lambda << '\n';
  }

  const ForceVector force =
      tikhonov_solve(system, RegConfig{config.reg_order, lambda});
  const GridSpec& grid = system.grid;

  write_file(config.out / "force.csv", [&](std::ostream& out) {
    out << (force.blocks == 2 ? "x,f,g\n" : "x,f\n");
    const Eigen::VectorXd f = force.f();
    for (int i = 1; i < grid.space_cells(); ++i) {
      out << fmt(grid.x(i)) << ',' << fmt(f(i - 1));
      if (force.blocks == 2) out << ',' << fmt(force.g()(i - 1));
      out << '\n';
    }
  });

  const Eigen::Index block = force.block_size();
  std::vector<std::pair<std::string, std::string>> metrics = {
      {"lambda", fmt(lambda)},
      {"reg_order", std::to_string(config.reg_order)},
      {"cond", fmt(condition_number(system.matrix))},
      {"residual_norm", fmt(residual(system, force.values).norm())},
      {"solution_norm",
       fmt((penalty_operator(config.reg_order, block, force.blocks) *
            force.values)
               .norm())},
      {"noise_pct", fmt(config.noise_pct)},
      {"seed", std::to_string(config.seed)},
  };
  if (prepared.exact) {
    const double err = accuracy_error(force, *prepared.exact);
    metrics.emplace_back("accuracy_error", fmt(err));
    metrics.emplace_back("relative_error",
                         fmt(err / prepared.exact->values.norm()));
    log << "accuracy error = " << err << '\n';
  }
  write_metrics(config.out / "metrics.csv", metrics);
  log << "invert: wrote force.csv, metrics.csv\n";
}

void run_lcurve(const RunConfig& config, std::ostream& log) {
  const PreparedInversion prepared = prepare_inversion(config);
  const LCurve curve =
      sweep(prepared.system, config.reg_order, config.lambda_grid);
  write_file(config.out / "lcurve.csv", [&](std::ostream& out) {
    write_lcurve_csv(out, curve.points);
  });
  for (double failed : curve.failed) {
    log << "solve failed at lambda = " << failed << '\n';
  }
  const double chosen = corner(curve.points, config.corner_axes);
  std::vector<std::pair<std::string, std::string>> metrics = {
      {"corner_lambda", fmt(chosen)},
      {"reg_order", std::to_string(config.reg_order)},
      {"failed_points", std::to_string(curve.failed.size())},
  };
  if (prepared.exact) {
    const ForceVector f = tikhonov_solve(
        prepared.system, RegConfig{config.reg_order, chosen});
    metrics.emplace_back("accuracy_error",
                         fmt(accuracy_error(f, *prepared.exact)));
  }
  write_metrics(config.out / "metrics.csv", metrics);
  log << "lcurve: corner at lambda = " << chosen << '\n';
}

std::vector<std::string> flux_row(const FluxSeries& series,
                                  const GridSpec& grid, std::string label) {
  std::vector<std::string> row{std::move(label)};
  for (double t : kTableTimes) {
    const int j = static_cast<int>(std::lround(t / grid.dt()));
    row.push_back(fmt(series.values(j - 1)));
  }
  return row;
}

void run_tables(const RunConfig& config, std::ostream& log) {
  std::vector<std::string> header{"M=N"};
  for (int id = 1; id <= 4; ++id) header.push_back("example_" + std::to_string(id));

  // Condition numbers and, at the finest grid, normalised singular values.
  std::vector<std::vector<std::string>> cond_rows;
  std::vector<Eigen::VectorXd> spectra;
  for (int mesh : kTableGrids) {
    const GridSpec grid = make_grid(1.0, 1.0, mesh, mesh, 1.0);
    std::vector<std::string> row{std::to_string(mesh)};
    for (int id = 1; id <= 4; ++id) {
      const Example ex = make_example(id, grid);
      const InverseSystem system = assemble_single(
          grid, ex.problem.initial(), ex.problem.boundary(), ex.basis_f(),
          measured_flux(id, grid, BoundaryEnd::kLeft), config.row_units);
      row.push_back(fmt(condition_number(system.matrix)));
      if (mesh == kTableGrids[3]) {
        spectra.push_back(normalized_singular_values(system.matrix));
      }
    }
    cond_rows.push_back(std::move(row));
  }
  write_file(config.out / "table1.csv", [&](std::ostream& out) {
    write_table(out, header, cond_rows);
  });
  write_file(config.out / "singular_values.csv", [&](std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    for (Eigen::Index k = 0; k < spectra.front().size(); ++k) {
      std::vector<std::string> row{std::to_string(k + 1)};
      for (const auto& s : spectra) row.push_back(fmt(s(k)));
      rows.push_back(std::move(row));
    }
    std::vector<std::string> sv_header{"k"};
    for (int id = 1; id <= 4; ++id) sv_header.push_back("example_" + std::to_string(id));
    write_table(out, sv_header, rows);
  });

  std::vector<std::string> time_header{"M=N"};
  for (double t : kTableTimes) time_header.push_back("t=" + fmt(t));
  for (int id : {1, 2}) {
    std::vector<std::vector<std::string>> rows;
    for (int mesh : kTableGrids) {
      const GridSpec grid = make_grid(1.0, 1.0, mesh, mesh, 1.0);
      const WaveField field = solve_direct(make_example(id, grid).problem);
      rows.push_back(flux_row(flux(field, BoundaryEnd::kLeft), grid,
                              std::to_string(mesh)));
    }
    if (id == 1) {
      const GridSpec grid = make_grid(1.0, 1.0, 10, 10, 1.0);
      rows.push_back(flux_row(measured_flux(1, grid, BoundaryEnd::kLeft), grid,
                              "exact"));
    }
    write_file(config.out / (id == 1 ? "table2.csv" : "table3.csv"),
               [&](std::ostream& out) { write_table(out, time_header, rows); });
  }

  const GridSpec fine = make_grid(1.0, 1.0, 80, 80, 1.0);
  std::vector<std::vector<std::string>> error_rows;
  for (int id = 2; id <= 4; ++id) {
    const Example ex = make_example(id, fine);
    const FluxSeries clean =
        measured_flux(id, fine, BoundaryEnd::kLeft, config.data_refine);
    for (int order = 0; order <= 2; ++order) {
      for (int level = 0; level < 3; ++level) {
        const double p = kStudyNoiseLevels[level];
        const double lambda = reference_lambda(id, order, level);
        const InverseSystem system = assemble_single(
            fine, ex.problem.initial(), ex.problem.boundary(), ex.basis_f(),
            add_noise(clean, NoiseSpec{p, config.seed}), config.row_units);
        const ForceVector f = tikhonov_solve(system, RegConfig{order, lambda});
        error_rows.push_back({std::to_string(id), std::to_string(order),
                              fmt(100.0 * p), fmt(lambda),
                              fmt(accuracy_error(f, ex.exact_force))});
      }
    }
  }
  write_file(config.out / "tables4_6.csv", [&](std::ostream& out) {
    write_table(out,
                {"example", "reg_order", "noise_pct", "lambda",
                 "accuracy_error"},
                error_rows);
  });
  log << "tables: wrote table1.csv, singular_values.csv, table2.csv, "
         "table3.csv, tables4_6.csv\n";
}

std::optional<fs::path> path_field(const Json& j, const char* key,
                                   std::optional<fs::path> fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return fs::path(j.at(key).get<std::string>());
}

}  // namespace

std::string_view toolkit_version() { return WAVESRC_VERSION; }

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kDirect: return "direct";
    case Command::kInvert: return "invert";
    case Command::kLCurve: return "lcurve";
    case Command::kTables: return "tables";
  }
  return "direct";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::kDirect, Command::kInvert, Command::kLCurve,
                    Command::kTables}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown command '" + std::string(name) + "'");
}

std::vector<double> parse_lambda_grid(std::string_view text) {
  if (text == "default") return default_lambda_grid();
  if (text == "extended") return extended_lambda_grid();
  std::vector<double> grid;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad lambda grid entry '" + std::string(item) + "'");
    }
    grid.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty lambda grid");
  return grid;
}

std::string config_to_json(const RunConfig& config) {
  Json j;
  j["command"] = std::string(to_string(config.command));
  j["example"] = config.example ? Json(*config.example) : Json(nullptr);
  j["M"] = config.space_cells;
  j["N"] = config.time_steps;
  j["L"] = config.length;
  j["T"] = config.horizon;
  j["c"] = config.wave_speed;
  j["noise_pct"] = config.noise_pct;
  j["seed"] = config.seed;
  j["reg_order"] = config.reg_order;
  j["lambda"] = config.lambda ? Json(*config.lambda) : Json("lcurve");
  j["lambda_grid"] = config.lambda_grid;
  j["row_units"] = config.row_units == RowUnits::kStencil ? "stencil" : "flux";
  j["corner_axes"] =
      config.corner_axes == CurveAxes::kLinear ? "linear" : "loglog";
  j["data_refine"] = config.data_refine;
  j["out"] = config.out.string();
  const ExternalData& ext = config.external;
  const std::pair<const char*, const std::optional<fs::path>*> files[] = {
      {"u0_file", &ext.initial_displacement}, {"v0_file", &ext.initial_velocity},
      {"p0_file", &ext.left_boundary},        {"pl_file", &ext.right_boundary},
      {"force_file", &ext.force},             {"basis_file", &ext.basis_f},
      {"basis_g_file", &ext.basis_g},         {"flux_left_file", &ext.flux_left},
      {"flux_right_file", &ext.flux_right},
  };
  for (const auto& [key, value] : files) {
    if (*value) j[key] = value->value().string();
  }
  return j.dump(2) + "\n";
}

RunConfig config_from_json(std::string_view text, RunConfig base) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
  }

  RunConfig c = std::move(base);
  try {
    if (j.contains("command")) c.command = parse_command(j["command"].get<std::string>());
    if (j.contains("example")) {
      c.example = j["example"].is_null() ? std::nullopt
                                         : std::optional<int>(j["example"].get<int>());
    }
    if (j.contains("M")) c.space_cells = j["M"].get<int>();
    if (j.contains("N")) c.time_steps = j["N"].get<int>();
    if (j.contains("L")) c.length = j["L"].get<double>();
    if (j.contains("T")) c.horizon = j["T"].get<double>();
    if (j.contains("c")) c.wave_speed = j["c"].get<double>();
    if (j.contains("noise_pct")) c.noise_pct = j["noise_pct"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("reg_order")) c.reg_order = j["reg_order"].get<int>();
    if (j.contains("lambda")) {
      const Json& l = j["lambda"];
      if (l.is_string() && l.get<std::string>() == "lcurve") {
        c.lambda.reset();
      } else {
        c.lambda = l.get<double>();
      }
    }
    if (j.contains("lambda_grid")) {
      const Json& g = j["lambda_grid"];
      c.lambda_grid = g.is_string() ? parse_lambda_grid(g.get<std::string>())
                                    : g.get<std::vector<double>>();
    }
    if (j.contains("row_units")) {
      const auto u = j["row_units"].get<std::string>();
      if (u != "stencil" && u != "flux") {
        throw Error(ErrorCode::kInvalidArgument, "row_units must be stencil or flux");
      }
      c.row_units = u == "stencil" ? RowUnits::kStencil : RowUnits::kFlux;
    }
    if (j.contains("corner_axes")) {
      const auto a = j["corner_axes"].get<std::string>();
      if (a != "linear" && a != "loglog") {
        throw Error(ErrorCode::kInvalidArgument, "corner_axes must be linear or loglog");
      }
      c.corner_axes = a == "linear" ? CurveAxes::kLinear : CurveAxes::kLogLog;
    }
    if (j.contains("data_refine")) c.data_refine = j["data_refine"].get<int>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();

    ExternalData& ext = c.external;
    ext.initial_displacement = path_field(j, "u0_file", ext.initial_displacement);
    ext.initial_velocity = path_field(j, "v0_file", ext.initial_velocity);
    ext.left_boundary = path_field(j, "p0_file", ext.left_boundary);
    ext.right_boundary = path_field(j, "pl_file", ext.right_boundary);
    ext.force = path_field(j, "force_file", ext.force);
    ext.basis_f = path_field(j, "basis_file", ext.basis_f);
    ext.basis_g = path_field(j, "basis_g_file", ext.basis_g);
    ext.flux_left = path_field(j, "flux_left_file", ext.flux_left);
    ext.flux_right = path_field(j, "flux_right_file", ext.flux_right);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad config value: ") + e.what());
  }
  return c;
}

void validate(const RunConfig& config) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  };
  if (config.noise_pct < 0.0 || !std::isfinite(config.noise_pct)) {
    fail("noise percentage must be >= 0");
  }
  if (config.reg_order < 0 || config.reg_order > 2) {
    fail("regularization order must be 0, 1 or 2");
  }
  if (config.lambda && !(*config.lambda >= 0.0)) fail("lambda must be >= 0");
  if (config.data_refine < 1) fail("data refinement must be >= 1");
  if (config.command == Command::kTables) return;

  const ExternalData& ext = config.external;
  const bool has_external = ext.initial_displacement || ext.initial_velocity ||
                            ext.left_boundary || ext.right_boundary ||
                            ext.force || ext.basis_f || ext.basis_g ||
                            ext.flux_left || ext.flux_right;
  if (config.example && has_external) {
    fail("use either --example or external data files, not both");
  }
  if (config.example || config.command == Command::kDirect) return;

  if (!ext.basis_f || !ext.flux_left) {
    fail(std::string(to_string(config.command)) +
         " needs --example or both a basis file and a left flux file");
  }
  if (static_cast<bool>(ext.basis_g) != static_cast<bool>(ext.flux_right)) {
    fail("dual-source runs need both a second basis file and a right flux file");
  }
}

void run(const RunConfig& config, std::ostream& log) {
  validate(config);
  std::error_code ec;
  fs::create_directories(config.out, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create " + config.out.string() + ": " + ec.message());
  }

  switch (config.command) {
    case Command::kDirect: run_direct(config, log); break;
    case Command::kInvert: run_invert(config, log); break;
    case Command::kLCurve: run_lcurve(config, log); break;
    case Command::kTables: run_tables(config, log); break;
  }

  write_file(config.out / "manifest.json", [&](std::ostream& out) {
    Json manifest;
    manifest["tool"] = "wavesrc";
    manifest["version"] = std::string(toolkit_version());
    manifest["seed"] = config.seed;
    manifest["config"] = Json::parse(config_to_json(config));
    out << manifest.dump(2) << '\n';
  });
}

}  // namespace wavesrc
