#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "okb/geometry.hpp"
#include "okb/linear_series.hpp"

namespace okb {

struct IntegralReport {
  Rational integral;
  Rational normalized;  // integral / body volume
  Rational body_volume;
  std::vector<std::pair<long, Rational>> mass_sequence;  // (k, mass(V_k) / k^(n+1))
  long max_level = 0;
};

/// mass(V_k) / k^(n+1) for the integral levels k in [from, to].
std::vector<std::pair<long, Rational>> mass_sequence(const SeriesFamily& family, const ValuationSpec& val, long from,
                                                     long to);

/// Integral of the level-K envelope, with the mass stream up to K.
IntegralReport integral(const SeriesFamily& family, const ValuationSpec& val, long max_level);

/// Integral of a known function (no mass stream).
IntegralReport integral(const ConcavePL& f);

struct HomogeneityComparison {
  Rational base;      // I(D)
  Rational scaled;    // I(m D)
  Rational expected;  // m^(n+1) I(D)
  bool holds() const { return scaled == expected; }
};

HomogeneityComparison check_integral_homogeneity(const SeriesFamily& family, const ValuationSpec& val, long m,
                                                 long max_level);

/// One member of a one-parameter family of divisors with a valuation.
struct FamilyMember {
  SeriesFamily family;
  ValuationSpec valuation;
};

struct FamilySpec {
  std::function<FamilyMember(const Rational&)> member;
  /// Known Okounkov function for the parameter, if any.
  std::function<std::optional<ConcavePL>(const Rational&)> closed_form;
};

struct ScanEntry {
  Rational lambda;
  bool flagged = false;
  std::string reason;
  std::optional<Rational> closed_form;        // integral of the known function
  std::optional<IntegralReport> truncated;    // level-K envelope
};

/// Integrals across a parameter grid. Parameters outside the bigness window
/// are flagged and skipped; the truncated envelope is computed only when some
/// level <= K is integral.
std::vector<ScanEntry> family_scan(const FamilySpec& spec, const std::vector<Rational>& lambda_grid, long max_level);

/// max |I(l_{i+1}) - I(l_i)| / |l_{i+1} - l_i| over consecutive unflagged
/// entries with a closed form (nullopt with fewer than two).
std::optional<Rational> observed_lipschitz(const std::vector<ScanEntry>& scan);

}  // namespace okb
