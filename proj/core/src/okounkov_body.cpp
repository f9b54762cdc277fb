#include "okb/okounkov_body.hpp"

#include <algorithm>
#include <stdexcept>

namespace okb {

bool OkounkovBodyApprox::certify(std::vector<Point> expected) {
  std::sort(expected.begin(), expected.end());
  exact = body.vertices() == expected;
  return exact;
}

OkounkovBodyApprox okounkov_body(const SeriesFamily& family, long max_level) {
  const auto points = distinct_points(valuation_points(family, max_level));
  if (points.empty()) throw std::invalid_argument("no sections at any level <= " + std::to_string(max_level));
  return {Polytope::hull(points, family.geometry().rank()), max_level, false};
}

std::optional<OkounkovBodyApprox> slice_body(const SeriesFamily& family, const ValuationSpec& val, const Rational& t,
                                             long max_level) {
  if (t.sign() < 0) throw std::invalid_argument("slice parameter must be non-negative");
  if (max_level < 1) throw std::invalid_argument("level budget must be at least 1");
  std::vector<Point> points;
  for (long k : family.levels(max_level)) {
    const LinearSeries v = family.level(k);
    const long tk = (t * Rational(k)).ceil().get_si();
    if (tk >= valuation_bound(v, val)) continue;
    for (const auto& key : attained_vectors(subspace_with_vanishing(v, val, tk))) {
      Point p;
      for (long e : key) p.emplace_back(e, k);
      points.push_back(std::move(p));
    }
  }
  if (points.empty()) return std::nullopt;
  return OkounkovBodyApprox{Polytope::hull(std::move(points), family.geometry().rank()), max_level, false};
}

}  // namespace okb
