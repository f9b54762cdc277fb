#include <gtest/gtest.h>

#include "okb/boundary.hpp"

using namespace okb;

namespace {

Point P(Rational a, Rational b) { return make_point({std::move(a), std::move(b)}); }

}  // namespace

TEST(Witness, DiskDemoIsDiscontinuousAtTheArcPoint) {
  const Body body = QuadraticCapBody::disk_demo();
  const Point p = P(Rational(1), Rational(1));
  EXPECT_FALSE(is_locally_cone(body, p));
  const WitnessReport w = discontinuity_witness(body, p, 10);
  EXPECT_TRUE(w.discontinuity_certified);
  EXPECT_FALSE(w.locally_cone);
  ASSERT_EQ(w.probes.size(), 10u);
  EXPECT_EQ(w.value_at_center.lo, Rational(1));
  const auto& cap = std::get<QuadraticCapBody>(body);
  for (size_t i = 0; i < w.probes.size(); ++i) {
    const Probe& pr = w.probes[i];
    // Independent membership check: on the circle (1-b)^2 + a^2 = 1.
    const Rational a = pr.point[0];
    const Rational b = pr.point[1];
    EXPECT_EQ((Rational(1) - b) * (Rational(1) - b) + a * a, Rational(1));
    EXPECT_TRUE(cap.on_curved_arc(pr.point));
    EXPECT_TRUE(pr.value.exact());
    EXPECT_EQ(pr.value.lo, Rational(0));
    if (i > 0) EXPECT_LT(pr.distance2, w.probes[i - 1].distance2);
    // Upper semicontinuity at p.
    EXPECT_LE(pr.value.hi, w.value_at_center.lo);
  }
  EXPECT_LT(w.probes.back().distance2, Rational(1, 1000));
}

TEST(Witness, SquareAndSegmentAreContinuous) {
  const Body square = Polytope::hull({P(0, 0), P(1, 0), P(0, 1), P(1, 1)}, 2);
  const WitnessReport s = discontinuity_witness(square, P(0, 0), 10);
  EXPECT_TRUE(s.locally_cone);
  EXPECT_TRUE(s.continuity_certified);
  EXPECT_FALSE(s.discontinuity_certified);
  for (const auto& pr : s.probes) EXPECT_TRUE(pr.value.exact());

  const Body seg = Polytope::hull({make_point({Rational(0)}), make_point({Rational(2)})}, 1);
  const WitnessReport t = discontinuity_witness(seg, make_point({Rational(0)}), 6);
  EXPECT_TRUE(t.continuity_certified);
  EXPECT_EQ(t.probes.front().value.lo, Rational(1, 2));
}

TEST(Witness, RejectsInteriorCenters) {
  const Body square = Polytope::hull({P(0, 0), P(1, 0), P(0, 1), P(1, 1)}, 2);
  EXPECT_THROW(discontinuity_witness(square, P(Rational(1, 2), Rational(1, 2)), 4), std::invalid_argument);
  EXPECT_THROW(HomothetyFunction(QuadraticCapBody::disk_demo(), P(Rational(1, 2), Rational(1, 2))), std::invalid_argument);
  EXPECT_THROW(discontinuity_witness(square, P(0, 0), 0), std::invalid_argument);
}

TEST(Homothety, ValueOneAtCenterAndConcaveTowardIt) {
  const HomothetyFunction h(QuadraticCapBody::disk_demo(), P(Rational(1), Rational(1)));
  EXPECT_EQ(h(P(Rational(1), Rational(1))).lo, Rational(1));
  const Point far = P(Rational(1, 2), Rational(1, 2));
  Rational prev(-1);
  for (long i = 0; i <= 8; ++i) {
    const Rational s(i, 8);
    const Point x = far + s * (P(Rational(1), Rational(1)) - far);
    const Enclosure e = h(x);
    EXPECT_GE(e.hi, prev);
    prev = e.lo;
  }
}
