#pragma once

#include <vector>

#include "okb/fekete.hpp"
#include "okb/linear_series.hpp"

namespace okb {

/// Jumping numbers of the filtration F_t = {val >= t} on one section space.
struct JumpingProfile {
  std::vector<long> jumps;  // e_1 >= ... >= e_dim
  std::vector<size_t> dims;  // dim F_t for t = 0, 1, ... down to the first zero
  Rational mass;

  long e_max() const { return jumps.front(); }
  long e_min() const { return jumps.back(); }
};

/// Scans dim F_t at integer t until it vanishes. Requires dim V >= 1.
JumpingProfile jumping_numbers(const LinearSeries& series, const ValuationSpec& val);

/// Largest t with F_t V = V: the minimum of val over V.
long vanishing_order(const LinearSeries& series, const ValuationSpec& val);

/// Largest t with F_t V != 0.
long max_jump(const LinearSeries& series, const ValuationSpec& val);

/// sup_k e_max(V_k)/k over integral k <= K (certified lower bound of the
/// limit, the sequence being superadditive) with an extrapolated estimate.
FeketeResult emax_asymptotic(const SeriesFamily& family, const ValuationSpec& val, long max_level);

/// inf_k val(V_k)/k over integral k <= K (certified upper bound, the sequence
/// being subadditive) with an extrapolated estimate.
FeketeResult emin_asymptotic(const SeriesFamily& family, const ValuationSpec& val, long max_level);

}  // namespace okb
