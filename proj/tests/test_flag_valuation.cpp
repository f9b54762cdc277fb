#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "okb/flag_valuation.hpp"

using namespace okb;

namespace {

Point P2(Rational a, Rational b) { return make_point({std::move(a), std::move(b)}); }

Polynomial random_section(std::mt19937_64& rng, const LinearSeries& v) {
  std::uniform_int_distribution<long> c(-3, 3);
  Polynomial out;
  for (auto s : v.space().sections()) {
    s *= Rational(c(rng));
    out += s;
  }
  return out.is_zero() ? v.space().sections().front() : out;
}

}  // namespace

TEST(FlagValuation, CoordinateSectionsOfTheHyperplaneClass) {
  const auto v = LinearSeries::build(GeometrySpec::p2(), {1, {}}, 1);
  const auto vecs = attained_vectors(v.space());
  const std::set<std::vector<long>> got(vecs.begin(), vecs.end());
  EXPECT_EQ(got, (std::set<std::vector<long>>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(flag_valuation(Polynomial::parse("X + Y", 3), v).entries, (std::vector<long>{0, 1}));
  EXPECT_EQ(flag_valuation(Polynomial::parse("X", 3), v).entries, (std::vector<long>{1, 0}));
  EXPECT_EQ(flag_valuation(Polynomial::parse("X - 3 Z", 3), v).entries, (std::vector<long>{0, 0}));
}

TEST(FlagValuation, AdditiveOnProducts) {
  std::mt19937_64 rng(29);
  const SeriesFamily fam(GeometrySpec::blowup({GeometrySpec::default_p1()}), {2, {1}});
  for (int trial = 0; trial < 40; ++trial) {
    const long m = 1 + trial % 2;
    const long n = 1 + (trial / 2) % 2;
    const auto vm = fam.level(m);
    const auto vn = fam.level(n);
    const Polynomial a = random_section(rng, vm);
    const Polynomial b = random_section(rng, vn);
    const auto va = flag_valuation(a, vm).entries;
    const auto vb = flag_valuation(b, vn).entries;
    const auto vp = flag_valuation(a * b, fam.level(m + n)).entries;
    for (size_t i = 0; i < vp.size(); ++i) EXPECT_EQ(vp[i], va[i] + vb[i]);
  }
}

TEST(ValuationPoints, EveryMonomialOfTheCompleteSeriesIsHit) {
  const SeriesFamily fam(GeometrySpec::p2(), {1, {}});
  for (long k = 1; k <= 4; ++k) {
    const auto pts = valuation_points(fam, k);
    size_t at_level = 0;
    for (const auto& p : pts) at_level += p.level == k ? 1 : 0;
    EXPECT_EQ(at_level, static_cast<size_t>((k + 1) * (k + 2) / 2));
  }
  const auto d = distinct_points(valuation_points(fam, 2));
  EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
  EXPECT_EQ(d.size(), 6u);
}

TEST(ValuationPoints, MidpointsAreAttainedAtDoubledLevels) {
  const SeriesFamily fam(GeometrySpec::blowup({GeometrySpec::default_p1(), GeometrySpec::generic_p2()}), {2, {1, 1}});
  const auto low = valuation_points(fam, 2);
  const auto high = distinct_points(valuation_points(fam, 4));
  for (const auto& a : low)
    for (const auto& b : low) {
      const Point mid = Rational(1, 2) * (a.point + b.point);
      EXPECT_TRUE(std::binary_search(high.begin(), high.end(), mid)) << to_string(mid);
    }
}

TEST(LevelSemigroup, HalfIntegralPointNeedsEvenLevels) {
  const SeriesFamily fam(GeometrySpec::p2(), {1, {}});
  const LevelSemigroup s = level_semigroup(fam, P2(Rational(1, 2), Rational(0)), 12);
  EXPECT_EQ(s.exponent, 2);
  EXPECT_EQ(s.members, (std::vector<long>{2, 4, 6, 8, 10, 12}));
  EXPECT_FALSE(s.unstable);
  const LevelSemigroup none = level_semigroup(fam, P2(Rational(2), Rational(0)), 6);
  EXPECT_EQ(none.exponent, 0);
  EXPECT_TRUE(none.members.empty());
}
