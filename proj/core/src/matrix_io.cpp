#include "glrank/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "glrank/errors.hpp"

namespace glrank {

namespace {

struct RawCsv {
  std::vector<QVector> rows;
  std::vector<std::size_t> lines;
};

RawCsv read_raw(std::istream& in) {
  RawCsv csv;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (std::all_of(raw.begin(), raw.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    QVector row;
    std::stringstream ss(raw);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(parse_rational(cell));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (!raw.empty() && raw.back() == ',') throw ParseError(line_no, "trailing comma");
    if (!csv.rows.empty() && row.size() != csv.rows.front().size()) {
      throw ParseError(line_no, "expected " + std::to_string(csv.rows.front().size()) + " columns, found " +
                                    std::to_string(row.size()));
    }
    csv.rows.push_back(std::move(row));
    csv.lines.push_back(line_no);
  }
  if (csv.rows.empty()) throw ParseError(line_no, "empty matrix file");
  return csv;
}

}  // namespace

QMatrix read_matrix_csv(std::istream& in) {
  RawCsv csv = read_raw(in);
  return QMatrix::from_rows(csv.rows, csv.rows.front().size());
}

QMatrix read_matrix_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open matrix file '" + path.string() + "'");
  return read_matrix_csv(in);
}

QMatrix read_symmetric_csv(std::istream& in) {
  RawCsv csv = read_raw(in);
  const std::size_t p = csv.rows.size();
  if (csv.rows.front().size() != p) {
    throw ParseError(csv.lines.back(), "matrix is " + std::to_string(p) + "x" +
                                           std::to_string(csv.rows.front().size()) + ", expected square");
  }
  QMatrix m = QMatrix::from_rows(csv.rows, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m(i, j) == m(j, i)) continue;
      const double a = m(i, j).get_d(), b = m(j, i).get_d();
      if (std::abs(a - b) > kInputSymmetryTolerance * std::max({1.0, std::abs(a), std::abs(b)})) {
        throw ParseError(csv.lines[i], "matrix is not symmetric at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
      }
      Rational avg = (m(i, j) + m(j, i)) / 2;
      m(i, j) = avg;
      m(j, i) = avg;
    }
  }
  return m;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_csv(std::ostream& out, const SymMatrix& m) { write_matrix_csv(out, m.to_eigen()); }

void write_matrix_csv(std::ostream& out, const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << to_fraction_string(m(i, j));
    }
    out << '\n';
  }
}

SymMatrix to_sym(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("to_sym: matrix is not square");
  SymMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) s.set(i, j, 0.5 * (m(i, j).get_d() + m(j, i).get_d()));
  return s;
}

}  // namespace glrank
