#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okb/geometry.hpp"
#include "okb/linear_series.hpp"
#include "okb/semigroup.hpp"

namespace okb {

enum class ScenarioKind { Series, FamilyScan, Boundary, Semigroup, Fekete };

std::string to_string(ScenarioKind kind);

/// A named experiment with its budgets and, for built-ins, golden answers.
struct Scenario {
  std::string name;
  std::string description;
  ScenarioKind kind = ScenarioKind::Series;

  std::optional<SeriesFamily> family;
  std::optional<ValuationSpec> valuation;
  long max_level = 6;
  long t_denominator_bound = 6;
  std::vector<Rational> lambda_grid;

  std::optional<Body> body;
  Point center;
  size_t probes = 10;

  std::vector<LatticePoint> generators;
  LatticePoint box;
  std::string function = "linear";
  std::vector<Rational> function_params;
  Point target;
  long steps = 32;

  std::optional<std::vector<Point>> expected_body;
  std::optional<ConcavePL> expected_function;
  std::optional<Rational> expected_integral;
  std::optional<std::vector<long>> expected_jumps;  // at level 1
  std::optional<bool> expected_discontinuity;
  std::optional<std::vector<LatticePoint>> expected_gaps;
  std::optional<Rational> expected_limit;
};

std::vector<std::string> builtin_scenario_names();

/// Throws std::invalid_argument for unknown names. `blowup1` takes an
/// optional lambda (default 1) for 2H - lambda E1.
Scenario builtin_scenario(const std::string& name, std::optional<Rational> lambda = std::nullopt);

/// key = value lines grouped in [sections]; '#' starts a comment.
using ConfigMap = std::map<std::string, std::map<std::string, std::string>>;
ConfigMap parse_config(std::string_view text);

/// Builds a scenario from config text. `[scenario] base = <builtin>` starts
/// from a built-in; other keys override it. Throws std::invalid_argument.
Scenario scenario_from_config(std::string_view text);

/// "p/q" list separated by commas.
std::vector<Rational> parse_rational_list(std::string_view text);
/// Coordinates separated by ',' or ':'.
Point parse_point(std::string_view text);
/// Points separated by ';'.
std::vector<Point> parse_point_list(std::string_view text);

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every golden answer the scenario carries.
std::vector<GoldenCheck> golden_checks(const Scenario& scenario);

}  // namespace okb
