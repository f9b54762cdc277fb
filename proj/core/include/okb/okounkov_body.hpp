#pragma once

#include <optional>
#include <vector>

#include "okb/flag_valuation.hpp"
#include "okb/geometry.hpp"
#include "okb/linear_series.hpp"

namespace okb {

/// Level-K inner approximation of an Okounkov body.
struct OkounkovBodyApprox {
  Polytope body;
  long max_level = 0;
  /// Set only by certify() when the hull matches a known polygon.
  bool exact = false;

  /// Marks the approximation exact iff its vertices are `expected`.
  bool certify(std::vector<Point> expected);
};

/// Convex hull of the normalized valuation vectors of levels <= K.
OkounkovBodyApprox okounkov_body(const SeriesFamily& family, long max_level);

/// Body of the graded subseries k -> {s in V_k : val(s) >= ceil(t k)}, or
/// nullopt if that subseries is zero at every level <= K.
std::optional<OkounkovBodyApprox> slice_body(const SeriesFamily& family, const ValuationSpec& val, const Rational& t,
                                             long max_level);

}  // namespace okb
