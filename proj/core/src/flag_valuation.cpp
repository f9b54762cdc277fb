#include "okb/flag_valuation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace okb {

Point FlagVector::normalized() const {
  Point p;
  for (long e : entries) p.emplace_back(e, level);
  return p;
}

std::vector<long> flag_key(const std::vector<Rational>& coeffs, const MonomialBasis& basis) {
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) return basis.key(i);
  throw std::invalid_argument("flag valuation of the zero section");
}

FlagVector flag_valuation(const Polynomial& s, const LinearSeries& series) {
  if (s.is_zero()) throw std::invalid_argument("flag valuation of the zero section");
  if (!series.contains(s)) throw std::invalid_argument("section " + s.str() + " is not in V_" + std::to_string(series.level()));
  return {flag_key(series.monomials().coefficients(s), series.monomials()), series.level()};
}

std::vector<std::vector<long>> attained_vectors(const SectionSpace& space) {
  std::vector<std::vector<long>> out;
  out.reserve(space.leads().size());
  for (size_t i : space.leads()) out.push_back(space.monomials().key(i));
  return out;
}

std::vector<ValuationPoint> valuation_points(const SeriesFamily& family, long max_level) {
  if (max_level < 1) throw std::invalid_argument("level budget must be at least 1");
  std::vector<ValuationPoint> out;
  for (long k : family.levels(max_level)) {
    const LinearSeries v = family.level(k);
    for (auto& key : attained_vectors(v.space())) {
      Point p;
      for (long e : key) p.emplace_back(e, k);
      out.push_back({std::move(p), std::move(key), k});
    }
  }
  std::sort(out.begin(), out.end(), [](const ValuationPoint& a, const ValuationPoint& b) {
    return a.point != b.point ? a.point < b.point : a.level < b.level;
  });
  return out;
}

std::vector<Point> distinct_points(const std::vector<ValuationPoint>& points) {
  std::vector<Point> out;
  for (const auto& p : points)
    if (out.empty() || out.back() != p.point) out.push_back(p.point);
  return out;
}

LevelSemigroup level_semigroup(const SeriesFamily& family, const Point& v, long max_level) {
  if (v.size() != family.geometry().rank()) throw std::invalid_argument("v has the wrong dimension");
  LevelSemigroup out;
  out.v = v;
  for (long k : family.levels(max_level)) {
    std::vector<long> key;
    bool integral = true;
    for (const auto& c : v) {
      const Rational kc = Rational(k) * c;
      if (!kc.is_integer()) {
        integral = false;
        break;
      }
      key.push_back(kc.num().get_si());
    }
    if (!integral) continue;
    const LinearSeries series = family.level(k);
    auto idx = series.monomials().index_of_key(key);
    if (!idx) continue;
    const auto& leads = series.space().leads();
    if (std::binary_search(leads.begin(), leads.end(), *idx)) out.members.push_back(k);
  }
  if (out.members.empty()) return out;

  long g = 0;
  for (long m : out.members) g = std::gcd(g, m);
  out.exponent = g;
  const auto is_member = [&](long k) { return std::binary_search(out.members.begin(), out.members.end(), k); };
  long k0 = (max_level / g) * g;
  while (k0 - g >= g && is_member(k0 - g)) k0 -= g;
  if (!is_member(k0)) k0 += g;
  out.stable_from = k0;
  for (long k = k0 - g; k >= g; k -= g) {
    if (!is_member(k)) {
      out.largest_gap = k;
      break;
    }
  }
  out.unstable = k0 > max_level || 2 * k0 > max_level + g;
  return out;
}

}  // namespace okb
