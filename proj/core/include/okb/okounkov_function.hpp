#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "okb/geometry.hpp"
#include "okb/linear_series.hpp"
#include "okb/okounkov_body.hpp"

namespace okb {

/// (1/k) max{t : some s in F_t V_k has nu(s) = k v}.
struct FunctionSample {
  Point v;
  long level = 0;
  long t = 0;
  Rational value;
};

/// Binary search on t for dim(F_t ∩ W>=) > dim(F_t ∩ W>), where W>= / W> are
/// the sections with flag vector lex >= / > k v. nullopt when k v is not
/// attained at level k (or k is not an integral level).
std::optional<FunctionSample> phi_sample(const SeriesFamily& family, const ValuationSpec& val, const Point& v, long k);
std::optional<FunctionSample> phi_sample(const LinearSeries& series, const ValuationSpec& val, const Point& v);

/// All samples of one level by sweeping t: the leading positions of F_t V_k
/// shrink as t grows, and each position keeps the last t it survived.
std::vector<FunctionSample> level_samples(const LinearSeries& series, const ValuationSpec& val);

/// Concave envelope of the samples of all levels <= K over the level-K body.
struct FunctionApprox {
  ConcavePL function;
  OkounkovBodyApprox body;
  std::vector<FunctionSample> samples;
  long max_level = 0;

  Rational operator()(const Point& x) const { return function(x); }
};

FunctionApprox okounkov_function_envelope(const SeriesFamily& family, const ValuationSpec& val, long max_level);

/// psi(x) = max{t in grid : x in the t-slice body}.
class SliceFunction {
 public:
  SliceFunction(Polytope body, std::vector<std::pair<Rational, std::optional<Polytope>>> slices);

  const Polytope& body() const { return body_; }
  const std::vector<std::pair<Rational, std::optional<Polytope>>>& slices() const { return slices_; }
  /// Throws std::invalid_argument outside the body.
  Rational operator()(const Point& x) const;

 private:
  Polytope body_;
  std::vector<std::pair<Rational, std::optional<Polytope>>> slices_;
};

SliceFunction okounkov_function_slices(const SeriesFamily& family, const ValuationSpec& val, long max_level,
                                       std::vector<Rational> t_grid);

/// Rationals p/q in [0, upper] with q <= denominator_bound, increasing.
std::vector<Rational> farey_grid(long denominator_bound, const Rational& upper);

struct IdentityCheck {
  Point x;
  Rational lhs;
  Rational rhs;
  bool skipped = false;

  Rational residual() const { return lhs - rhs; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool holds() const;
  size_t evaluated() const;
};

/// nu(Y1) for the flag line Y1 = {x[line_var] = 0}, a section of O(1) on P2.
long flag_divisor_value(const SeriesFamily& family, const ValuationSpec& val);

/// phi(x) = (1 - x1) phi(0, x2/(1 - x1), ...) + x1 nu(Y1); samples with
/// x1 = 1 are skipped.
IdentityReport check_reduction(const FunctionApprox& f, long nu_y1, const std::vector<Point>& samples);
IdentityReport check_reduction(const SeriesFamily& family, const ValuationSpec& val, const std::vector<Point>& samples,
                               long max_level);

/// phi(x) against (1/m) phi_m(m x), phi_m from the series of m D.
IdentityReport check_homogeneity(const SeriesFamily& family, const ValuationSpec& val, long m,
                                 const std::vector<Point>& samples, long max_level);

}  // namespace okb
