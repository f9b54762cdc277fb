#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "okb/filtration.hpp"

using namespace okb;

namespace {

const Point p0 = make_point({Rational(0), Rational(0), Rational(1)});

// ord at [0:0:1] is a monomial valuation: X^a Y^b Z^c has order a + b.
std::vector<long> monomial_jumps(long d) {
  std::vector<long> out;
  for (long a = 0; a <= d; ++a)
    for (long b = 0; a + b <= d; ++b) out.push_back(a + b);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST(Jumping, HyperplaneClassAtTheFlagPoint) {
  const auto v = LinearSeries::build(GeometrySpec::p2(), {1, {}}, 1);
  const JumpingProfile jp = jumping_numbers(v, ValuationSpec::at_point(p0));
  EXPECT_EQ(jp.jumps, (std::vector<long>{1, 1, 0}));
  EXPECT_EQ(jp.mass, Rational(2));
  EXPECT_EQ(jp.dims, (std::vector<size_t>{3, 2, 0}));
  EXPECT_EQ(jp.e_max(), 1);
  EXPECT_EQ(jp.e_min(), 0);
}

TEST(Jumping, MonomialOracleForHigherDegrees) {
  for (long d = 1; d <= 4; ++d) {
    const auto v = LinearSeries::build(GeometrySpec::p2(), {d, {}}, 1);
    const JumpingProfile jp = jumping_numbers(v, ValuationSpec::at_point(p0));
    const auto expected = monomial_jumps(d);
    EXPECT_EQ(jp.jumps, expected);
    long mass = 0;
    for (long e : expected) mass += e;
    EXPECT_EQ(jp.mass, Rational(mass));
  }
  const auto v2 = LinearSeries::build(GeometrySpec::p2(), {2, {}}, 1);
  EXPECT_EQ(jumping_numbers(v2, ValuationSpec::at_point(p0)).jumps, (std::vector<long>{2, 2, 2, 1, 1, 0}));
}

TEST(Jumping, LinearlyBoundedAndVeroneseCompatible) {
  const SeriesFamily fam(GeometrySpec::blowup({GeometrySpec::default_p1()}), {2, {1}});
  const auto val = ValuationSpec::at_point(GeometrySpec::generic_p2());
  for (long k = 1; k <= 4; ++k) {
    const auto v = fam.level(k);
    EXPECT_LE(max_jump(v, val), 2 * k);
    EXPECT_GE(vanishing_order(v, val), 0);
  }
  const auto ver = fam.veronese(2);
  for (long k = 1; k <= 2; ++k)
    EXPECT_EQ(jumping_numbers(ver.level(k), val).jumps, jumping_numbers(fam.level(2 * k), val).jumps);
}

TEST(Jumping, ExceptionalAndCurveValuations) {
  const auto b = LinearSeries::build(GeometrySpec::blowup({GeometrySpec::default_p1()}), {2, {1}}, 1);
  const JumpingProfile e = jumping_numbers(b, ValuationSpec::along_exceptional(0));
  // Conics through [1:0:0]: XY and XZ are smooth there, Y^2, YZ, Z^2 singular.
  EXPECT_EQ(e.jumps, (std::vector<long>{1, 1, 1, 0, 0}));
  const auto v = LinearSeries::build(GeometrySpec::p2(), {3, {}}, 1);
  const JumpingProfile c = jumping_numbers(v, ValuationSpec::along_curve(Polynomial::parse("X", 3)));
  EXPECT_EQ(c.dims, (std::vector<size_t>{10, 6, 3, 1, 0}));
}

TEST(Asymptotics, FlagPointOrderHasSlopeOneAndZero) {
  const SeriesFamily fam(GeometrySpec::p2(), {1, {}});
  const auto val = ValuationSpec::at_point(p0);
  const FeketeResult emax = emax_asymptotic(fam, val, 6);
  EXPECT_EQ(emax.certified, Rational(1));
  EXPECT_FALSE(emax.non_linear);
  const FeketeResult emin = emin_asymptotic(fam, val, 6);
  EXPECT_EQ(emin.certified, Rational(0));

  const SeriesFamily blow(GeometrySpec::blowup({GeometrySpec::default_p1()}), {1, {Rational(1, 2)}});
  EXPECT_EQ(emax_asymptotic(blow, ValuationSpec::at_point(GeometrySpec::generic_p2()), 8).certified, Rational(1));
}
