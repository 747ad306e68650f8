#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace glrank {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

/// Dense row-major matrix of canonical GMP rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  /// Row-major list of integers; throws std::invalid_argument when sizes mismatch.
  static QMatrix from_ints(std::size_t rows, std::size_t cols, const std::vector<long>& values);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& x);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// The exact binary value of a finite double. Throws std::invalid_argument for inf/nan.
Rational from_double(double x);

/// Accepts integers, "a/b", and decimals with optional exponent ("-1.25e-3"), exactly.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& q);

/// Multiplies by the lcm of denominators and divides by the gcd of numerators.
/// The zero vector maps to zeros.
ZVector primitive_integer_row(const QVector& v);

}  // namespace glrank
