#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "glrank/qmatrix.hpp"
#include "glrank/rank_factor.hpp"
#include "glrank/sym_matrix.hpp"

namespace glrank {

/// Comma-separated rows of numbers. Entries are read exactly (decimal, exponent or "a/b").
/// Blank lines and '#' comments are skipped. Throws ParseError with the line number on
/// bad tokens or ragged rows.
QMatrix read_matrix_csv(std::istream& in);
QMatrix read_matrix_csv_file(const std::filesystem::path& path);

inline constexpr double kInputSymmetryTolerance = 1e-12;

/// A p x p CSV, checked for symmetry within kInputSymmetryTolerance and symmetrised
/// exactly (average of the two triangles). Throws ParseError when it is not square or
/// not symmetric.
QMatrix read_symmetric_csv(std::istream& in);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

void write_matrix_csv(std::ostream& out, const SymMatrix& m);
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);
/// Entries as "num/den".
void write_matrix_csv(std::ostream& out, const QMatrix& m);

SymMatrix to_sym(const QMatrix& m);

}  // namespace glrank
