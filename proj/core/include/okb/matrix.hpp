#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "okb/rational.hpp"

namespace okb {

/// Dense immutable matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols);
  /// Every row must have length `cols`; with no rows the matrix is 0 x cols.
  Matrix(std::vector<std::vector<Rational>> rows, size_t cols);
  explicit Matrix(std::vector<std::vector<Rational>> rows);

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(size_t r) const;

  /// Vertical concatenation; column counts must agree.
  Matrix stacked(const Matrix& below) const;
  Matrix transposed() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row echelon form over the integers. Rows are primitive (content 1) and
/// every pivot entry is positive.
struct EchelonForm {
  std::vector<std::vector<BigInt>> rows;
  std::vector<size_t> pivots;  // pivot column of each row, strictly increasing
  size_t cols = 0;
};

/// Fraction-free elimination of the row space of `m`. With `reduced` the
/// entries above each pivot are cleared as well.
EchelonForm echelon(const Matrix& m, bool reduced = false);

size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}; vectors are scaled to primitive integer form.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Leading columns of an echelon basis of the row space of `m`.
std::vector<size_t> pivot_columns(const Matrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (the zero vector is returned unchanged).
std::vector<Rational> primitive(const std::vector<Rational>& v);

}  // namespace okb
