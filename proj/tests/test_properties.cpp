#include <gtest/gtest.h>

#include "okb/properties.hpp"

using namespace okb;

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, NoFailuresOnTwoSeeds) {
  for (std::uint64_t seed : {1ULL, 99ULL}) {
    const PropertyReport r = run_property_suite(GetParam(), 200, seed);
    EXPECT_EQ(r.cases, 200u);
    EXPECT_TRUE(r.passed()) << r.first_failure;
  }
}

TEST_P(Suite, DeterministicForAFixedSeed) {
  const PropertyReport a = run_property_suite(GetParam(), 50, 7);
  const PropertyReport b = run_property_suite(GetParam(), 50, 7);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.first_failure, b.first_failure);
}

INSTANTIATE_TEST_SUITE_P(All, Suite, ::testing::ValuesIn(property_suite_names()),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (auto& c : n)
                             if (c == '-') c = '_';
                           return n;
                         });

TEST(Properties, UnknownSuiteIsRejected) { EXPECT_THROW(run_property_suite("nope", 1, 1), std::invalid_argument); }
