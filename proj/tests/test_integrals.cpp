#include <gtest/gtest.h>

#include "okb/golden.hpp"
#include "okb/integrals.hpp"
#include "okb/okounkov_function.hpp"

using namespace okb;

namespace {

const Point p0 = make_point({Rational(0), Rational(0), Rational(1)});
const Point p1 = GeometrySpec::default_p1();
const SeriesFamily plane(GeometrySpec::p2(), {1, {}});

// For ord at [1:0:0], dim F_t V_k = C(k+2,2) - C(t+1,2), so summing over
// t >= 1 gives k(k+1)(k+2)/3.
Rational mass_p1(long k) { return Rational(k * (k + 1) * (k + 2), 3); }

}  // namespace

TEST(Mass, ClosedFormForTheOffLinePoint) {
  const auto seq = mass_sequence(plane, ValuationSpec::at_point(p1), 1, 12);
  ASSERT_EQ(seq.size(), 12u);
  for (const auto& [k, m] : seq) {
    EXPECT_EQ(m, mass_p1(k) / Rational(k * k * k));
    EXPECT_EQ(m - Rational(1, 3), Rational(1, k) + Rational(2, 3 * k * k));
  }
}

TEST(Integral, EnvelopeIntegralsOnThePlane) {
  const IntegralReport r0 = integral(plane, ValuationSpec::at_point(p0), 3);
  EXPECT_EQ(r0.integral, Rational(1, 3));
  EXPECT_EQ(r0.body_volume, Rational(1, 2));
  EXPECT_EQ(r0.normalized, Rational(2, 3));
  EXPECT_EQ(integral(golden::p2_order_off_line()).integral, Rational(1, 3));
}

TEST(Integral, IndependentOfTheFlag) {
  const SeriesFamily other(GeometrySpec::p2(Flag{1, 0}), {1, {}});
  for (const auto& pt : {p0, p1, GeometrySpec::generic_p2()}) {
    const auto val = ValuationSpec::at_point(pt);
    EXPECT_EQ(integral(plane, val, 4).integral, integral(other, val, 4).integral) << to_string(pt);
  }
}

TEST(Integral, HomogeneousOfDegreeThree) {
  for (long m = 2; m <= 3; ++m) {
    const HomogeneityComparison h = check_integral_homogeneity(plane, ValuationSpec::at_point(p0), m, 3);
    EXPECT_TRUE(h.holds());
    EXPECT_EQ(h.base, Rational(1, 3));
  }
}

// Integrating 1 - a below a + b = 1 - lambda and 2 - 2a - b - lambda above it
// over {0 <= a <= 1 - lambda, 0 <= b <= 1 - a} by hand.
TEST(FamilyScan, CubicInLambda) {
  const std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  const auto scan = family_scan(golden::blowup_family(), grid, 8);
  ASSERT_EQ(scan.size(), 5u);
  const std::vector<Rational> expected = {Rational(1, 3), Rational(39, 128), Rational(11, 48), Rational(47, 384)};
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_FALSE(scan[i].flagged);
    ASSERT_TRUE(scan[i].closed_form.has_value());
    EXPECT_EQ(*scan[i].closed_form, expected[i]);
    EXPECT_EQ(golden::blowup_integral(grid[i]), expected[i]);
    ASSERT_TRUE(scan[i].truncated.has_value());
    EXPECT_LE((scan[i].truncated->integral - expected[i]).abs(), Rational(1, 8));
  }
  EXPECT_TRUE(scan[4].flagged);
  EXPECT_FALSE(scan[4].reason.empty());
  const auto lip = observed_lipschitz(scan);
  ASSERT_TRUE(lip.has_value());
  EXPECT_LE(*lip, Rational(1, 2));
}
