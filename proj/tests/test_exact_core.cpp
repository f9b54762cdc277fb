#include <gtest/gtest.h>

#include <random>

#include "okb/matrix.hpp"
#include "okb/rational.hpp"

using namespace okb;

namespace {

// Textbook Gauss-Jordan on mpq_class, independent of the library's integer
// elimination.
size_t naive_rank(std::vector<std::vector<mpq_class>> a) {
  size_t r = 0;
  const size_t cols = a.empty() ? 0 : a.front().size();
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, std::vector<std::vector<mpq_class>>& copy) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> zero(0, 2);
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  copy.assign(rows, std::vector<mpq_class>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (zero(rng) == 0) continue;
      const long p = num(rng);
      const long q = den(rng);
      m[i][j] = Rational(p, q);
      copy[i][j] = mpq_class(p, q);
      copy[i][j].canonicalize();
    }
  return Matrix(m, cols);
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-0/5").str(), "0");
  EXPECT_EQ(Rational::parse(" 7 ").str(), "7");
  EXPECT_EQ(Rational::parse("-3/-9").str(), "1/3");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, FloorCeilAndHelpers) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(8, 4).ceil(), 2);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(isqrt(BigInt(99)), 9);
  EXPECT_EQ(isqrt(BigInt(100)), 10);
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
}

TEST(Matrix, RankPlusNullityIsColumnCount) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t rows = 1 + rng() % 5;
    const size_t cols = 1 + rng() % 6;
    std::vector<std::vector<mpq_class>> copy;
    const Matrix m = random_matrix(rng, rows, cols, copy);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m), naive_rank(copy));
    EXPECT_EQ(rank(m) + ker.size(), cols);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Matrix, SolveFindsSolutionsOrReportsInconsistency) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<mpq_class>> copy;
    const Matrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, copy);
    std::vector<Rational> x(m.cols());
    for (auto& c : x) c = Rational(static_cast<long>(rng() % 7) - 3);
    const auto b = m.apply(x);
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
  const Matrix parallel({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
  EXPECT_FALSE(solve(parallel, {Rational(1), Rational(3)}).has_value());
}

TEST(Matrix, EchelonRowsArePrimitiveWithPositivePivots) {
  const Matrix m({{Rational(2), Rational(4), Rational(6)}, {Rational(1, 2), Rational(0), Rational(1)}});
  const EchelonForm e = echelon(m, true);
  ASSERT_EQ(e.pivots, (std::vector<size_t>{0, 1}));
  for (size_t r = 0; r < e.rows.size(); ++r) {
    EXPECT_GT(e.rows[r][e.pivots[r]], 0);
    BigInt g = 0;
    for (const auto& c : e.rows[r]) g = gcd(g, c);
    EXPECT_EQ(g, 1);
  }
  EXPECT_EQ(e.rows[1][0], 0);
  EXPECT_EQ(e.rows[0][1], 0);
}

TEST(Matrix, EmptyAndIdentityShapes) {
  EXPECT_EQ(kernel_basis(Matrix(0, 3)).size(), 3u);
  EXPECT_TRUE(kernel_basis(Matrix::identity(4)).empty());
  EXPECT_EQ(primitive({Rational(2, 3), Rational(-4, 9)}), (std::vector<Rational>{Rational(3), Rational(-2)}));
}
