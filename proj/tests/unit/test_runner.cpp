#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "../support.hpp"
#include "wavesrc/csv.hpp"
#include "wavesrc/errors.hpp"
#include "wavesrc/runner.hpp"

using namespace wavesrc;
using wavesrc::testing::scratch_dir;
using wavesrc::testing::slurp;
namespace fs = std::filesystem;

namespace {

std::map<std::string, std::string> read_metrics(const fs::path& path) {
  std::map<std::string, std::string> metrics;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "metric,value");
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    metrics[line.substr(0, comma)] = line.substr(comma + 1);
  }
  return metrics;
}

void write_lines(const fs::path& path, const Eigen::VectorXd& v) {
  std::ofstream out(path);
  write_matrix_csv(out, v);
}

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

TEST_CASE("config round trip through JSON") {
  RunConfig c;
  c.command = Command::kLCurve;
  c.example = 3;
  c.space_cells = 40;
  c.time_steps = 50;
  c.noise_pct = 3.0;
  c.seed = 12345678901234ull;
  c.reg_order = 2;
  c.lambda.reset();
  c.lambda_grid = {1e-4, 1e-3};
  c.row_units = RowUnits::kFlux;
  c.corner_axes = CurveAxes::kLogLog;
  c.data_refine = 2;
  c.out = "somewhere";
  c.external.flux_right = "q.csv";

  const std::string text = config_to_json(c);
  const RunConfig back = config_from_json(text);
  CHECK(config_to_json(back) == text);
  CHECK(back.seed == c.seed);
  CHECK(!back.lambda);
  CHECK(back.row_units == RowUnits::kFlux);
  CHECK(back.external.flux_right == fs::path("q.csv"));
}

TEST_CASE("config parsing rejects bad input") {
  CHECK(code_of([] { config_from_json("[1]"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { config_from_json("{"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { config_from_json(R"({"M": "ten"})"); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { config_from_json(R"({"row_units": "volts"})"); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_command("plot"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("lambda grid parsing") {
  CHECK(parse_lambda_grid("default") == default_lambda_grid());
  CHECK(parse_lambda_grid("extended") == extended_lambda_grid());
  CHECK(parse_lambda_grid("1e-6, 1e-5,0.1") ==
        std::vector<double>{1e-6, 1e-5, 0.1});
  CHECK(code_of([] { parse_lambda_grid("1e-3,abc"); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("validation") {
  RunConfig c;
  c.command = Command::kInvert;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::kInvalidArgument);
  c.example = 1;
  CHECK_NOTHROW(validate(c));
  c.reg_order = 3;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::kInvalidArgument);
  c.reg_order = 0;
  c.external.basis_f = "h.csv";
  CHECK(code_of([&] { validate(c); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("direct run on zero external data") {
  const fs::path dir = scratch_dir("runner_direct");
  write_lines(dir / "u0.csv", Eigen::VectorXd::Zero(11));
  RunConfig c;
  c.command = Command::kDirect;
  c.space_cells = 10;
  c.time_steps = 10;
  c.external.initial_displacement = dir / "u0.csv";
  c.out = dir / "out";
  std::ostringstream log;
  run(c, log);
  const Eigen::MatrixXd u = read_matrix_csv(dir / "out" / "field.csv");
  CHECK(u.rows() == 11);
  CHECK(u.cols() == 11);
  CHECK(u.isZero(0.0));
  CHECK(read_column(dir / "out" / "flux_left.csv").size() == 10);
}

TEST_CASE("exact-data inversion of Example 1") {
  const fs::path dir = scratch_dir("runner_invert");
  RunConfig c;
  c.command = Command::kInvert;
  c.example = 1;
  c.out = dir;
  std::ostringstream log;
  run(c, log);
  const auto metrics = read_metrics(dir / "metrics.csv");
  CHECK(std::stod(metrics.at("accuracy_error")) <= 0.5);
  CHECK(std::stod(metrics.at("lambda")) == 0.0);
  std::ifstream in(dir / "force.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,f");
  const Eigen::MatrixXd force = read_matrix_csv(in);
  CHECK(force.rows() == 79);
}

TEST_CASE("lcurve run picks a grid value") {
  const fs::path dir = scratch_dir("runner_lcurve");
  RunConfig c;
  c.command = Command::kLCurve;
  c.example = 2;
  c.noise_pct = 1.0;
  c.seed = 1;
  c.lambda.reset();
  c.out = dir;
  std::ostringstream log;
  run(c, log);
  const auto metrics = read_metrics(dir / "metrics.csv");
  const double lambda = std::stod(metrics.at("corner_lambda"));
  const auto grid = default_lambda_grid();
  CHECK(std::find(grid.begin(), grid.end(), lambda) != grid.end());
  CHECK(metrics.at("failed_points") == "0");
}

TEST_CASE("tables reproduce the condition numbers") {
  const fs::path dir = scratch_dir("runner_tables");
  RunConfig c;
  c.command = Command::kTables;
  c.out = dir;
  std::ostringstream log;
  run(c, log);
  std::ifstream in(dir / "table1.csv");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.rfind("40,", 0) == 0) {
      const double cond = std::stod(line.substr(3, line.find(',', 3) - 3));
      CHECK(cond == doctest::Approx(437.93).epsilon(0.02));
    }
  }
  for (const char* name : {"table2.csv", "table3.csv", "tables4_6.csv",
                           "singular_values.csv", "manifest.json"}) {
    CHECK(fs::exists(dir / name));
  }
}

TEST_CASE("reruns are byte-identical and carry a manifest") {
  const fs::path a = scratch_dir("runner_repeat_a");
  const fs::path b = scratch_dir("runner_repeat_b");
  RunConfig c;
  c.command = Command::kInvert;
  c.example = 3;
  c.noise_pct = 3.0;
  c.seed = 77;
  c.reg_order = 1;
  c.lambda = 1e-3;
  std::ostringstream log;
  c.out = a;
  run(c, log);
  c.out = b;
  run(c, log);
  CHECK(slurp(a / "force.csv") == slurp(b / "force.csv"));
  CHECK(slurp(a / "metrics.csv") == slurp(b / "metrics.csv"));

  const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
  CHECK(manifest.at("seed") == 77);
  CHECK(manifest.at("version") == std::string(toolkit_version()));
  CHECK(manifest.at("config").at("reg_order") == 1);
}
