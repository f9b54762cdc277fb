#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "okb/rational.hpp"

namespace okb {

enum class Orientation { Superadditive, Subadditive };

/// Raised when a sequence declared super- or subadditive is not.
class OrientationViolation : public std::runtime_error {
 public:
  OrientationViolation(long i, long j, const std::string& what) : std::runtime_error(what), i_(i), j_(j) {}
  long i() const { return i_; }
  long j() const { return j_; }

 private:
  long i_;
  long j_;
};

/// One-sided limit data for a_k / k. `certified` is sup (superadditive) or
/// inf (subadditive) of a_k / k over the sampled levels, a valid bound on the
/// limit; `estimate` extrapolates the running bound.
struct FeketeResult {
  Rational certified;
  Rational estimate;
  long max_level = 0;
  /// The running bound still grows linearly with K: a_k is not linearly bounded
  /// as far as the samples show, so no finite limit is claimed.
  bool non_linear = false;
  std::vector<std::pair<long, Rational>> ratios;  // (k, a_k / k)
};

/// Evaluates a at k = step, 2 step, ..., <= K, checks the declared
/// orientation on every pair with i + j <= K and returns the Fekete data.
/// Throws OrientationViolation on a failed pair.
FeketeResult fekete_limit(const std::function<Rational(long)>& a, Orientation orientation, long max_level,
                          long step = 1);

/// Same, from precomputed values a_k at levels step, 2 step, ...
FeketeResult fekete_limit(const std::vector<std::pair<long, Rational>>& values, Orientation orientation);

}  // namespace okb
