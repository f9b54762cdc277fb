#include "okb/fekete.hpp"

#include <map>

namespace okb {

namespace {

// Subadditive canonical path: b_k with b_{i+j} <= b_i + b_j.
FeketeResult subadditive_limit(const std::vector<std::pair<long, Rational>>& b) {
  if (b.empty()) throw std::invalid_argument("fekete_limit: no levels to sample");
  std::map<long, Rational> by_level(b.begin(), b.end());
  for (const auto& [i, bi] : by_level) {
    for (const auto& [j, bj] : by_level) {
      if (j < i) continue;
      auto it = by_level.find(i + j);
      if (it == by_level.end()) continue;
      if (it->second > bi + bj)
        throw OrientationViolation(i, j,
                                   "orientation violated at k=" + std::to_string(i) + ", l=" + std::to_string(j) +
                                       ": a_{k+l} = " + it->second.str() + " vs a_k + a_l = " + (bi + bj).str());
    }
  }

  FeketeResult out;
  std::vector<std::pair<long, Rational>> running;
  for (const auto& [k, bk] : by_level) {
    const Rational r = bk / Rational(k);
    out.ratios.emplace_back(k, r);
    running.emplace_back(k, running.empty() ? r : min(running.back().second, r));
  }
  out.max_level = running.back().first;
  out.certified = running.back().second;

  // Running bound at the largest sampled level <= K/2.
  const long half = out.max_level / 2;
  const std::pair<long, Rational>* mid = nullptr;
  for (const auto& entry : running)
    if (entry.first <= half) mid = &entry;
  if (mid == nullptr) {
    out.estimate = out.certified;
    return out;
  }
  out.estimate = Rational(2) * out.certified - mid->second;
  if (out.estimate > out.certified) out.estimate = out.certified;
  out.non_linear = mid->second.sign() < 0 && out.certified <= Rational(3, 2) * mid->second;
  return out;
}

FeketeResult negate(FeketeResult r) {
  r.certified = -r.certified;
  r.estimate = -r.estimate;
  for (auto& [k, v] : r.ratios) v = -v;
  return r;
}

}  // namespace

FeketeResult fekete_limit(const std::vector<std::pair<long, Rational>>& values, Orientation orientation) {
  if (orientation == Orientation::Subadditive) return subadditive_limit(values);
  std::vector<std::pair<long, Rational>> negated;
  negated.reserve(values.size());
  for (const auto& [k, v] : values) negated.emplace_back(k, -v);
  return negate(subadditive_limit(negated));
}

FeketeResult fekete_limit(const std::function<Rational(long)>& a, Orientation orientation, long max_level, long step) {
  if (step < 1 || max_level < step) throw std::invalid_argument("fekete_limit: need 1 <= step <= K");
  std::vector<std::pair<long, Rational>> values;
  for (long k = step; k <= max_level; k += step) values.emplace_back(k, a(k));
  return fekete_limit(values, orientation);
}

}  // namespace okb
