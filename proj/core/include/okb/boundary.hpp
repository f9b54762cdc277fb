#pragma once

#include <vector>

#include "okb/geometry.hpp"

namespace okb {

/// x -> sup{t : x in t p + (1 - t) body} for a boundary point p.
class HomothetyFunction {
 public:
  HomothetyFunction(Body body, Point center, unsigned precision_bits = 40);

  const Body& body() const { return body_; }
  const Point& center() const { return center_; }
  Enclosure operator()(const Point& x) const { return homothety_sup(body_, center_, x, bits_); }

 private:
  Body body_;
  Point center_;
  unsigned bits_;
};

struct Probe {
  Point point;
  Rational distance2;  // squared Euclidean distance to the center
  Enclosure value;
};

struct WitnessReport {
  bool locally_cone = true;
  Enclosure value_at_center;
  std::vector<Probe> probes;
  /// Not locally a cone, value 1 at the center and exactly 0 on boundary
  /// probes converging to it.
  bool discontinuity_certified = false;
  /// Exact values on probes p + s_i d with (1 - value) / s_i constant, so the
  /// values tend to 1 linearly.
  bool continuity_certified = false;
};

/// Boundary probes converging to p: on the curved arc when the body is not a
/// cone at p, otherwise along a tight facet (or the interior in dimension 1).
/// Throws std::invalid_argument when p is not a boundary point.
WitnessReport discontinuity_witness(const Body& body, const Point& p, size_t n_probes);

}  // namespace okb
