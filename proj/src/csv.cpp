#include "wavesrc/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wavesrc/errors.hpp"

namespace wavesrc {

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) {
    throw Error(ErrorCode::kIoError, "cannot format floating-point value");
  }
  return std::string(buffer.data(), end);
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& matrix) {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j) out << ',';
      out << format_double(matrix(i, j));
    }
    out << '\n';
  }
}

Eigen::MatrixXd read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto first = cell.find_first_not_of(" \t");
      const auto last = cell.find_last_not_of(" \t");
      if (first == std::string::npos) {
        throw Error(ErrorCode::kIoError,
                    "empty cell on line " + std::to_string(line_no));
      }
      const char* begin = cell.data() + first;
      const char* stop = cell.data() + last + 1;
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(begin, stop, value);
      if (ec != std::errc{} || ptr != stop) {
        throw Error(ErrorCode::kIoError, "malformed number '" + cell +
                                             "' on line " +
                                             std::to_string(line_no));
      }
      row.push_back(value);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::kIoError,
                  "ragged row on line " + std::to_string(line_no));
    }
    rows.push_back(std::move(row));
  }

  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(rows.size()),
                         rows.empty() ? 0
                                      : static_cast<Eigen::Index>(
                                            rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return matrix;
}

Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  return read_matrix_csv(in);
}

Eigen::VectorXd read_column(const std::filesystem::path& path) {
  const Eigen::MatrixXd data = read_matrix_csv(path);
  if (data.cols() > 1) {
    throw Error(ErrorCode::kIoError,
                path.string() + ": expected one value per line");
  }
  return data.size() ? Eigen::VectorXd(data.col(0)) : Eigen::VectorXd();
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) out << ',';
      out << cells[j];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

}  // namespace wavesrc
