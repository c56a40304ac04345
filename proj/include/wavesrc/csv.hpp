#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wavesrc {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// One matrix row per line, comma separated, no header. A vector is written
/// as a single column.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& matrix);

/// Parses a comma-separated numeric matrix. Blank lines are skipped; rows
/// must all have the same width.
Eigen::MatrixXd read_matrix_csv(std::istream& in);
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);

/// One value per line.
Eigen::VectorXd read_column(const std::filesystem::path& path);

/// Writes `header` then rows; cells are already formatted.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

}  // namespace wavesrc
