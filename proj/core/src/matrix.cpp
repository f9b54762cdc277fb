#include "okb/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace okb {

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::vector<std::vector<Rational>> rows, size_t cols) : rows_(rows.size()), cols_(cols) {
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("matrix rows have inconsistent lengths");
    for (auto& x : r) data_.push_back(std::move(x));
  }
}

namespace {
size_t width(const std::vector<std::vector<Rational>>& rows) { return rows.empty() ? 0 : rows.front().size(); }
}  // namespace

Matrix::Matrix(std::vector<std::vector<Rational>> rows) : rows_(rows.size()), cols_(width(rows)) {
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("matrix rows have inconsistent lengths");
    for (auto& x : r) data_.push_back(std::move(x));
  }
}

Matrix Matrix::identity(size_t n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Matrix(std::move(rows), n);
}

std::vector<Rational> Matrix::row(size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("stacked: column count mismatch");
  Matrix out = *this;
  out.rows_ += below.rows_;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = (*this)(r, c);
  return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Rational> out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    Rational s;
    for (size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) s += (*this)(r, c) * v[c];
    out[r] = std::move(s);
  }
  return out;
}

namespace {

using IntRow = std::vector<BigInt>;

void make_primitive(IntRow& row) {
  BigInt g = 0;
  for (const auto& x : row) {
    if (x == 0) continue;
    g = gcd(g, x);
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : row)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const Matrix& m, size_t r) {
  BigInt den = 1;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!m(r, c).is_zero()) den = lcm(den, m(r, c).den());
  IntRow row(m.cols());
  for (size_t c = 0; c < m.cols(); ++c) {
    const Rational& x = m(r, c);
    if (x.is_zero()) continue;
    row[c] = x.num() * (den / x.den());
  }
  make_primitive(row);
  return row;
}

bool is_zero_row(const IntRow& row) {
  return std::all_of(row.begin(), row.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

EchelonForm echelon(const Matrix& m, bool reduced) {
  EchelonForm out;
  out.cols = m.cols();
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    IntRow row = integer_row(m, r);
    if (!is_zero_row(row)) rows.push_back(std::move(row));
  }

  size_t rank = 0;
  for (size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    // Smallest nonzero entry keeps coefficient growth down.
    size_t best = rows.size();
    for (size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    IntRow& pivot_row = rows[rank];
    if (pivot_row[c] < 0)
      for (auto& x : pivot_row) x = -x;

    const size_t start = reduced ? 0 : rank + 1;
    for (size_t i = start; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const BigInt g = gcd(pivot_row[c], rows[i][c]);
      const BigInt scale = pivot_row[c] / g;
      const BigInt factor = rows[i][c] / g;
      IntRow& target = rows[i];
      for (size_t j = 0; j < target.size(); ++j) {
        if (scale != 1 && target[j] != 0) target[j] *= scale;
        if (pivot_row[j] != 0) target[j] -= factor * pivot_row[j];
      }
      make_primitive(target);
    }
    out.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

size_t rank(const Matrix& m) { return echelon(m, false).pivots.size(); }

std::vector<size_t> pivot_columns(const Matrix& m) { return echelon(m, false).pivots; }

std::vector<Rational> primitive(const std::vector<Rational>& v) {
  BigInt den = 1;
  for (const auto& x : v)
    if (!x.is_zero()) den = lcm(den, x.den());
  IntRow ints(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) ints[i] = v[i].num() * (den / v[i].den());
  make_primitive(ints);
  std::vector<Rational> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i]);
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const EchelonForm ef = echelon(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : ef.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < ef.rows.size(); ++r) {
      const BigInt& entry = ef.rows[r][f];
      if (entry != 0) v[ef.pivots[r]] = -Rational(entry, ef.rows[r][ef.pivots[r]]);
    }
    basis.push_back(primitive(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  std::vector<std::vector<Rational>> aug;
  aug.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  const EchelonForm ef = echelon(Matrix(std::move(aug), m.cols() + 1), true);
  std::vector<Rational> x(m.cols());
  for (size_t r = 0; r < ef.rows.size(); ++r) {
    const size_t p = ef.pivots[r];
    if (p == m.cols()) return std::nullopt;
    x[p] = Rational(ef.rows[r][m.cols()], ef.rows[r][p]);
  }
  return x;
}

}  // namespace okb
