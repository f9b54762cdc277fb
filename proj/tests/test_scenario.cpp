#include <gtest/gtest.h>

#include "okb/scenario.hpp"

using namespace okb;

TEST(Scenario, EveryBuiltinPassesItsGoldenChecks) {
  for (const auto& name : builtin_scenario_names()) {
    const Scenario s = builtin_scenario(name);
    const auto checks = golden_checks(s);
    EXPECT_FALSE(checks.empty()) << name;
    for (const auto& c : checks) EXPECT_TRUE(c.passed) << name << " " << c.name << ": " << c.detail;
  }
  EXPECT_THROW(builtin_scenario("no-such-scenario"), std::invalid_argument);
}

TEST(Scenario, BlowupLambdaParameter) {
  const Scenario s = builtin_scenario("blowup1", Rational(1, 2));
  EXPECT_EQ(s.family->divisor().multiplicities.front(), Rational(1, 2));
  EXPECT_FALSE(s.expected_body.has_value());
  EXPECT_TRUE(builtin_scenario("blowup1").expected_body.has_value());
}

TEST(Config, SectionsCommentsAndOverrides) {
  const ConfigMap m = parse_config("# leading comment\nname = x\n[expected]\nintegral = 1/3 # trailing\n");
  EXPECT_EQ(m.at("scenario").at("name"), "x");
  EXPECT_EQ(m.at("expected").at("integral"), "1/3");
  EXPECT_THROW(parse_config("[broken\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("no equals sign\n"), std::invalid_argument);

  const Scenario s = scenario_from_config(
      "[scenario]\nname = custom-blowup\nmodel = blowup\npoints = 1:0:0\ndegree = 1\nmultiplicities = 1/2\n"
      "valuation = point 1:1:1\nmax_level = 8\n[expected]\nintegral = 11/48\n");
  EXPECT_EQ(s.name, "custom-blowup");
  EXPECT_EQ(s.max_level, 8);
  EXPECT_EQ(s.family->geometry().model(), Model::BlowupP2);
  EXPECT_EQ(*s.expected_integral, Rational(11, 48));

  const Scenario b = scenario_from_config("base = p2-ordP0\nmax_level = 2\n");
  EXPECT_EQ(b.max_level, 2);
  EXPECT_TRUE(b.expected_function.has_value());

  const Scenario g = scenario_from_config("kind = semigroup\ngenerators = 3; 5\nbox = 20\n[expected]\ngaps = 1; 2; 4; 7\n");
  ASSERT_EQ(golden_checks(g).size(), 1u);
  EXPECT_TRUE(golden_checks(g).front().passed);
}

TEST(Config, NamedDiagnostics) {
  EXPECT_THROW(scenario_from_config("model = p2\ndegree = 1\n"), std::invalid_argument);
  EXPECT_THROW(scenario_from_config("model = torus\nvaluation = point 0:0:1\n"), std::invalid_argument);
  EXPECT_THROW(scenario_from_config("model = p2\nvaluation = nowhere\n"), std::invalid_argument);
  EXPECT_THROW(scenario_from_config("base = p2-ordP0\nmax_level = two\n"), std::invalid_argument);
  EXPECT_THROW(scenario_from_config("kind = boundary\n"), std::invalid_argument);
  EXPECT_THROW(scenario_from_config("base = p2-ordP0\n[expected]\ncolour = blue\n"), std::invalid_argument);
}

TEST(Parsers, PointsAndLists) {
  EXPECT_EQ(parse_point("[1:0:2]"), make_point({Rational(1), Rational(0), Rational(2)}));
  EXPECT_EQ(parse_point("(1/2, 3)"), make_point({Rational(1, 2), Rational(3)}));
  EXPECT_EQ(parse_point_list("0,0; 1,1").size(), 2u);
  EXPECT_EQ(parse_rational_list("0,1/4, 1/2"), (std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 2)}));
  EXPECT_THROW(parse_point(""), std::invalid_argument);
}
