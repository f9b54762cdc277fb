#include <gtest/gtest.h>

#include <random>

#include "okb/linear_series.hpp"
#include "okb/polynomial.hpp"

using namespace okb;

namespace {

Point P3(long a, long b, long c) { return make_point({Rational(a), Rational(b), Rational(c)}); }

// Order in s of f(p + s v), expanding each term as a product of the
// univariate factors (p_i + s v_i).
long order_along_line(const Polynomial& f, const Point& p, const Point& v) {
  using Uni = std::vector<Rational>;
  const auto times = [](const Uni& a, const Uni& b) {
    Uni out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  Uni g(static_cast<size_t>(f.degree()) + 1, Rational(0));
  for (const auto& [e, c] : f.terms()) {
    Uni term{c};
    for (size_t i = 0; i < p.size(); ++i)
      for (long r = 0; r < e[i]; ++r) term = times(term, Uni{p[i], v[i]});
    for (size_t i = 0; i < term.size(); ++i) g[i] += term[i];
  }
  for (size_t i = 0; i < g.size(); ++i)
    if (!g[i].is_zero()) return static_cast<long>(i);
  return f.degree() + 1;
}

long oracle_multiplicity(const Polynomial& f, const Point& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  long best = f.degree() + 1;
  for (int i = 0; i < 4; ++i) best = std::min(best, order_along_line(f, p, P3(d(rng), d(rng), d(rng))));
  return best;
}

Polynomial parse(const std::string& s) { return Polynomial::parse(s, 3); }

}  // namespace

TEST(Polynomial, ParseAndArithmetic) {
  const Polynomial f = parse("X*Y - 2*Z^2");
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.evaluate(P3(1, 2, 3)), Rational(-16));
  EXPECT_EQ((f * parse("X")).degree(), 3);
  EXPECT_EQ(parse("1/2 X^2").evaluate(P3(2, 0, 0)), Rational(2));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_THROW(parse("X^"), std::invalid_argument);
}

TEST(MonomialBasis, SortedByFlagKey) {
  const MonomialBasis b(3, 2, FlagOrder{{0, 1}});
  ASSERT_EQ(b.size(), 6u);
  for (size_t i = 1; i < b.size(); ++i) EXPECT_LE(b.key(i - 1), b.key(i));
  EXPECT_EQ(b.key(0), (std::vector<long>{0, 0}));
  const auto idx = b.index_of_key({1, 1});
  ASSERT_TRUE(idx.has_value());
  EXPECT_EQ(b.polynomial(std::vector<Rational>(6)).is_zero(), true);
}

TEST(Multiplicity, AgreesWithLineRestrictionOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-2, 2);
  const std::vector<Point> points = {P3(0, 0, 1), P3(1, 0, 0), P3(1, 1, 1), P3(2, -1, 3)};
  for (int trial = 0; trial < 60; ++trial) {
    const Point& p = points[static_cast<size_t>(trial) % points.size()];
    // Lines through p are products of forms vanishing at p.
    Polynomial f = Polynomial::monomial(3, Exponent{}, Rational(1));
    const int through = trial % 3;
    for (int i = 0; i < through; ++i) {
      Point a = P3(c(rng), c(rng), c(rng));
      // a' = a - (a.p / p.p) p vanishes at p.
      const Rational s = dot(a, p) / dot(p, p);
      a = a - s * p;
      Polynomial lin;
      for (size_t v = 0; v < 3; ++v) {
        Polynomial x = Polynomial::variable(3, v);
        x *= a[v];
        lin += x;
      }
      if (!lin.is_zero()) f = f * lin;
    }
    Polynomial extra;
    for (size_t v = 0; v < 3; ++v) {
      Polynomial x = Polynomial::variable(3, v);
      x *= Rational(c(rng));
      extra += x;
    }
    if (!extra.is_zero()) f = f * extra;
    if (f.is_zero()) continue;
    EXPECT_EQ(multiplicity_at(f, p), oracle_multiplicity(f, p, rng)) << f.str() << " at " << to_string(p);
  }
  EXPECT_EQ(multiplicity_at(parse("X*Y + Z^2"), P3(1, -2, 2)), 0);
  EXPECT_EQ(multiplicity_at(parse("X*Y"), P3(0, 0, 1)), 2);
}

TEST(LinearSeries, DimensionOfCompleteSeriesOnP2) {
  for (long d = 1; d <= 3; ++d)
    for (long k = 1; k <= 4; ++k) {
      const auto v = LinearSeries::build(GeometrySpec::p2(), {d, {}}, k);
      EXPECT_EQ(v.dim(), static_cast<size_t>((k * d + 2) * (k * d + 1) / 2));
    }
}

TEST(LinearSeries, BlowupDimensionsSubtractIndependentConditions) {
  const auto one = LinearSeries::build(GeometrySpec::blowup({GeometrySpec::default_p1()}), {2, {1}}, 1);
  EXPECT_EQ(one.dim(), 5u);
  const auto two = LinearSeries::build(GeometrySpec::blowup({GeometrySpec::default_p1(), GeometrySpec::generic_p2()}),
                                       {2, {1, 1}}, 2);
  // Degree 4 with two double points: 15 - 3 - 3.
  EXPECT_EQ(two.dim(), 9u);
  const auto half = LinearSeries::build(GeometrySpec::blowup({GeometrySpec::default_p1()}), {1, {Rational(1, 2)}}, 4);
  // Degree 4 with a double point: 15 - 3.
  EXPECT_EQ(half.dim(), 12u);
}

TEST(LinearSeries, RejectsNonIntegralLevelsAndBadGeometry) {
  EXPECT_THROW(LinearSeries::build(GeometrySpec::p2(), {Rational(1, 2), {}}, 1), std::invalid_argument);
  EXPECT_THROW(LinearSeries::build(GeometrySpec::blowup({GeometrySpec::default_p1()}), {1, {Rational(1, 3)}}, 2),
               std::invalid_argument);
  EXPECT_THROW(GeometrySpec::blowup({P3(0, 1, 0)}), std::invalid_argument);  // on the flag line
  EXPECT_THROW(GeometrySpec::blowup({P3(1, 0, 0), P3(2, 0, 0)}), std::invalid_argument);
}

TEST(Valuations, PointCurveAndExceptional) {
  const auto v3 = LinearSeries::build(GeometrySpec::p2(), {3, {}}, 1);
  EXPECT_EQ(valuation_of(v3, ValuationSpec::at_point(P3(0, 0, 1)), parse("X^2*Z + Y^3")), 2);
  EXPECT_EQ(valuation_of(v3, ValuationSpec::along_curve(parse("X + Y")), parse("X^2*Z + 2 X*Y*Z + Y^2*Z")), 2);
  EXPECT_EQ(valuation_of(v3, ValuationSpec::along_curve(parse("X")), parse("X^2*Y")), 2);
  EXPECT_THROW(valuation_of(v3, ValuationSpec::at_point(P3(0, 0, 1)), Polynomial()), std::invalid_argument);
  EXPECT_THROW(valuation_of(v3, ValuationSpec::at_point(P3(0, 0, 1)), parse("X")), std::invalid_argument);

  const auto b = LinearSeries::build(GeometrySpec::blowup({GeometrySpec::default_p1()}), {2, {1}}, 1);
  EXPECT_EQ(valuation_of(b, ValuationSpec::along_exceptional(0), parse("Y*Z")), 1);
  EXPECT_EQ(valuation_of(b, ValuationSpec::along_exceptional(0), parse("X*Y + Z^2")), 0);
  EXPECT_THROW(valuation_of(b, ValuationSpec::at_point(GeometrySpec::default_p1()), parse("Y*Z")), std::invalid_argument);
}

TEST(Valuations, VanishingSubspacesShrinkAndEndAtTheBound) {
  const auto v = LinearSeries::build(GeometrySpec::p2(), {2, {}}, 1);
  for (const auto& val : {ValuationSpec::at_point(P3(1, 1, 1)), ValuationSpec::along_curve(parse("X - Z"))}) {
    size_t prev = v.dim();
    EXPECT_EQ(vanishing_dim(v, val, 0), v.dim());
    for (long t = 1; t <= valuation_bound(v, val); ++t) {
      const size_t d = vanishing_dim(v, val, t);
      EXPECT_LE(d, prev);
      prev = d;
    }
    EXPECT_EQ(prev, 0u);
  }
  EXPECT_EQ(vanishing_dim(v, ValuationSpec::at_point(P3(1, 1, 1)), 1), 5u);
  EXPECT_EQ(vanishing_dim(v, ValuationSpec::at_point(P3(1, 1, 1)), 2), 3u);
}

TEST(LinearSeries, ProductsOfSectionsLandInTheSumLevel) {
  const SeriesFamily fam(GeometrySpec::blowup({GeometrySpec::default_p1(), GeometrySpec::generic_p2()}), {2, {1, 1}});
  for (long m = 1; m <= 2; ++m)
    for (long n = 1; n <= 2; ++n) {
      const auto a = fam.level(m).space().sections();
      const auto b = fam.level(n).space().sections();
      const auto vmn = fam.level(m + n);
      for (const auto& f : a)
        for (const auto& g : b) EXPECT_TRUE(vmn.contains(f * g));
    }
  EXPECT_FALSE(fam.level(2).contains(parse("X^4")));
  EXPECT_EQ(fam.step(), 1);
  EXPECT_EQ(SeriesFamily(GeometrySpec::blowup({GeometrySpec::default_p1()}), {1, {Rational(1, 3)}}).step(), 3);
  EXPECT_EQ(fam.veronese(2).divisor().degree, Rational(4));
}
