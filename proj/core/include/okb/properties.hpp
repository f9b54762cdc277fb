#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace okb {

/// Outcome of one randomized property suite.
struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when every case passed
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

/// filtration-axioms, multiplicativity, midpoint-superadditivity,
/// hull-idempotence, envelope-dominates-samples.
std::vector<std::string> property_suite_names();

/// Runs `cases` seeded random instances. Throws std::invalid_argument for an
/// unknown suite name.
PropertyReport run_property_suite(const std::string& name, std::size_t cases, std::uint64_t seed);

}  // namespace okb
