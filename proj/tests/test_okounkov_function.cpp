#include <gtest/gtest.h>

#include "okb/golden.hpp"
#include "okb/okounkov_function.hpp"

using namespace okb;

namespace {

Point P(Rational a, Rational b) { return make_point({std::move(a), std::move(b)}); }

const Point p0 = make_point({Rational(0), Rational(0), Rational(1)});
const Point p1 = GeometrySpec::default_p1();
const SeriesFamily plane(GeometrySpec::p2(), {1, {}});

std::vector<Point> grid_points(long n) {
  std::vector<Point> out;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; a + b <= n; ++b) out.push_back(P(Rational(a, n), Rational(b, n)));
  return out;
}

}  // namespace

// X^a Y^b Z^c vanishes to order a + b at [0:0:1] and to order b + c = k - a
// at [1:0:0]; both valuations are monomial, so the pre-function is exact.
TEST(PreFunction, MonomialValuationsOnThePlane) {
  for (long k = 1; k <= 3; ++k)
    for (long a = 0; a <= k; ++a)
      for (long b = 0; a + b <= k; ++b) {
        const Point v = P(Rational(a, k), Rational(b, k));
        const auto s0 = phi_sample(plane, ValuationSpec::at_point(p0), v, k);
        const auto s1 = phi_sample(plane, ValuationSpec::at_point(p1), v, k);
        ASSERT_TRUE(s0 && s1);
        EXPECT_EQ(s0->value, v[0] + v[1]);
        EXPECT_EQ(s1->value, Rational(1) - v[0]);
        EXPECT_EQ(s0->t, a + b);
      }
  EXPECT_FALSE(phi_sample(plane, ValuationSpec::at_point(p0), P(Rational(1, 2), Rational(0)), 1).has_value());
  EXPECT_FALSE(phi_sample(plane, ValuationSpec::at_point(p0), P(Rational(2), Rational(0)), 2).has_value());
}

TEST(PreFunction, LevelSweepAgreesWithBinarySearch) {
  const SeriesFamily fam(GeometrySpec::blowup({p1}), {1, {Rational(1, 2)}});
  const auto val = ValuationSpec::at_point(GeometrySpec::generic_p2());
  for (long k : {2, 4}) {
    const auto v = fam.level(k);
    for (const auto& s : level_samples(v, val)) {
      const auto b = phi_sample(v, val, s.v);
      ASSERT_TRUE(b.has_value());
      EXPECT_EQ(b->t, s.t) << to_string(s.v);
    }
  }
}

TEST(Envelope, PlaneFunctionsAreLinear) {
  const FunctionApprox f0 = okounkov_function_envelope(plane, ValuationSpec::at_point(p0), 3);
  EXPECT_TRUE(golden::same_function(f0.function, golden::p2_order_at_flag_point()));
  const FunctionApprox f1 = okounkov_function_envelope(plane, ValuationSpec::at_point(p1), 3);
  EXPECT_TRUE(golden::same_function(f1.function, golden::p2_order_off_line()));
  for (const auto& s : f1.samples) EXPECT_EQ(f1(s.v), s.value);
}

TEST(Envelope, CurveFunctions) {
  const SeriesFamily line(GeometrySpec::p1(), {1, {}});
  const auto fp = okounkov_function_envelope(line, ValuationSpec::at_point(line.geometry().flag_point()), 6);
  const auto fq = okounkov_function_envelope(line, ValuationSpec::at_point(make_point({Rational(1), Rational(1)})), 6);
  for (long i = 0; i <= 12; ++i) {
    const Point x = make_point({Rational(i, 12)});
    EXPECT_EQ(fp(x), Rational(i, 12));
    EXPECT_EQ(fq(x), Rational(1) - Rational(i, 12));
  }
}

TEST(Envelope, BlowupPiecewiseFunctionAtHalf) {
  const Rational lambda(1, 2);
  const SeriesFamily fam(GeometrySpec::blowup({p1}), {1, {lambda}});
  const FunctionApprox f = okounkov_function_envelope(fam, ValuationSpec::at_point(GeometrySpec::generic_p2()), 8);
  const ConcavePL expected = golden::blowup_order_off_lines(lambda);
  EXPECT_TRUE(golden::same_function(f.function, expected));
  for (const auto& x : distinct_points(valuation_points(fam, 8))) {
    EXPECT_EQ(f(x), expected(x));
    if (x[0] + x[1] >= Rational(1, 2)) EXPECT_EQ(f(x), Rational(2) - Rational(2) * x[0] - x[1] - lambda);
  }
}

TEST(Envelope, MonotoneInTheLevelBudget) {
  const SeriesFamily fam(GeometrySpec::blowup({p1}), {1, {Rational(1, 2)}});
  const auto val = ValuationSpec::at_point(GeometrySpec::generic_p2());
  const FunctionApprox coarse = okounkov_function_envelope(fam, val, 4);
  const FunctionApprox fine = okounkov_function_envelope(fam, val, 8);
  for (const auto& x : coarse.function.domain().vertices()) EXPECT_LE(coarse(x), fine(x));
  for (const auto& s : coarse.samples) EXPECT_LE(coarse(s.v), fine(s.v));
}

TEST(Slices, AgreeWithTheEnvelopeWithinTheGrid) {
  const auto val = ValuationSpec::at_point(p0);
  const FunctionApprox f = okounkov_function_envelope(plane, val, 6);
  const SliceFunction psi = okounkov_function_slices(plane, val, 6, farey_grid(6, Rational(1)));
  for (const auto& x : grid_points(6)) EXPECT_LE((f(x) - psi(x)).abs(), Rational(1, 6));
  EXPECT_THROW(psi(P(Rational(1), Rational(1))), std::invalid_argument);
  EXPECT_EQ(farey_grid(3, Rational(1)),
            (std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)}));
}

TEST(Identities, ReductionAndHomogeneityOnThePlane) {
  const auto pts = grid_points(5);
  for (const auto& [pt, nu] : {std::pair{p0, 1L}, std::pair{p1, 0L}}) {
    const auto val = ValuationSpec::at_point(pt);
    EXPECT_EQ(flag_divisor_value(plane, val), nu);
    const IdentityReport r = check_reduction(plane, val, pts, 3);
    EXPECT_TRUE(r.holds());
    EXPECT_GT(r.evaluated(), 10u);
    for (long m = 1; m <= 3; ++m) EXPECT_TRUE(check_homogeneity(plane, val, m, pts, 3).holds());
  }
}
