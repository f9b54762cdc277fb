#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "okb/geometry.hpp"
#include "okb/rational.hpp"

namespace okb {

using LatticePoint = std::vector<long>;

/// Finitely generated subsemigroup of Z^n (n <= 3) with non-negative, nonzero
/// generators, so that its cone is pointed and lies in the positive orthant.
class DiscreteSemigroup {
 public:
  explicit DiscreteSemigroup(std::vector<LatticePoint> generators);

  size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& generators() const { return generators_; }
  /// Hermite normal form rows spanning ZS.
  const std::vector<std::vector<BigInt>>& group_basis() const { return hnf_; }

  bool in_group(const LatticePoint& x) const;
  bool in_cone(const Point& x) const;
  /// Relative interior of the cone.
  bool in_open_cone(const Point& x) const;
  /// Exact membership in S (search over the box [0, x]).
  bool contains(const LatticePoint& x) const;
  /// S intersected with the box [0, upper], in lexicographic order.
  std::vector<LatticePoint> members(const LatticePoint& upper) const;

 private:
  std::vector<bool> reachable(const LatticePoint& upper) const;

  size_t dim_;
  std::vector<LatticePoint> generators_;
  std::vector<std::vector<BigInt>> hnf_;
  Polytope base_;  // generators scaled to coordinate sum 1
};

Point to_point(const LatticePoint& x);

/// x in S^reg = ZS ∩ closed cone.
bool regularization_membership(const DiscreteSemigroup& s, const LatticePoint& x);

struct GapReport {
  LatticePoint box;
  std::vector<LatticePoint> gaps;  // (S^reg \ S) ∩ [0, box], lexicographic
  /// The doubled box finds no gap outside the original box.
  bool stable = false;
};

GapReport gordan_gap(const DiscreteSemigroup& s, const LatticePoint& box);

using LatticeFunction = std::function<Rational(const LatticePoint&)>;

/// Raised when f(u + v) > f(u) + f(v) on a sampled pair.
class SubadditivityViolation : public std::runtime_error {
 public:
  SubadditivityViolation(LatticePoint u, LatticePoint v, const std::string& what)
      : std::runtime_error(what), u_(std::move(u)), v_(std::move(v)) {}
  const LatticePoint& u() const { return u_; }
  const LatticePoint& v() const { return v_; }

 private:
  LatticePoint u_;
  LatticePoint v_;
};

/// Checks subadditivity on `cases` random pairs of S ∩ [0, box].
void check_subadditive(const DiscreteSemigroup& s, const LatticeFunction& f, const LatticePoint& box, size_t cases,
                       std::uint64_t seed);

struct ScheduleStep {
  Rational epsilon;
  LatticePoint u;
};

/// eps_k = 1/k, u_k = floor(k x) for k = 1..steps.
std::vector<ScheduleStep> ray_schedule(const Point& x, long steps);

struct HatfEstimate {
  Rational estimate;  // eps f(u) at the last step
  Rational lo;        // min over the second half of the schedule
  Rational hi;        // max over the second half of the schedule
  Rational width() const { return hi - lo; }
};

/// Tail estimate of eps_k f(u_k). Throws std::invalid_argument when x or a
/// schedule point leaves the open cone, u_k is not in S, or eps_k <= 0.
HatfEstimate hatf_estimate(const DiscreteSemigroup& s, const LatticeFunction& f, const Point& x,
                           const std::vector<ScheduleStep>& schedule);

/// Built-in functions: "linear" (coefficients), "ceil-norm",
/// "ceil-multiple" (c: ceil(c u)), "floor-multiple" (c: floor(c u)).
LatticeFunction builtin_function(const std::string& name, const std::vector<Rational>& params = {});

LatticeFunction negated(LatticeFunction f);

}  // namespace okb
