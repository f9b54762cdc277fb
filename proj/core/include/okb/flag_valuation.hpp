#pragma once

#include <optional>
#include <vector>

#include "okb/linear_series.hpp"
#include "okb/polynomial.hpp"

namespace okb {

/// nu(s) at level k: (ord along the flag line, ord at P0 of the restriction)
/// on surfaces, the order at the flag point on P1.
struct FlagVector {
  std::vector<long> entries;
  long level = 0;

  Point normalized() const;
  friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

/// Flag valuation of a nonzero section of V.
FlagVector flag_valuation(const Polynomial& s, const LinearSeries& series);

/// Flag valuation of a coefficient vector over the monomials of V.
std::vector<long> flag_key(const std::vector<Rational>& coeffs, const MonomialBasis& basis);

/// Valuation vectors attained in a section space: its leading positions.
std::vector<std::vector<long>> attained_vectors(const SectionSpace& space);

struct ValuationPoint {
  Point point;  // nu / k
  std::vector<long> vector;
  long level;
};

/// All (nu / k, k) over integral levels k <= K, sorted by point then level.
std::vector<ValuationPoint> valuation_points(const SeriesFamily& family, long max_level);

/// The normalized points only, deduplicated, lexicographic.
std::vector<Point> distinct_points(const std::vector<ValuationPoint>& points);

struct LevelSemigroup {
  Point v;
  std::vector<long> members;
  long exponent = 0;     // eventual period, 0 when no member was found
  long stable_from = 0;  // first level from which every multiple of the exponent is a member
  long largest_gap = 0;  // largest multiple of the exponent below stable_from that is missing
  bool unstable = true;  // periodicity not observed on the second half of the budget
};

LevelSemigroup level_semigroup(const SeriesFamily& family, const Point& v, long max_level);

}  // namespace okb
