#include "okb/filtration.hpp"

#include <stdexcept>

namespace okb {

JumpingProfile jumping_numbers(const LinearSeries& series, const ValuationSpec& val) {
  if (series.dim() == 0) throw std::invalid_argument("jumping numbers of the zero space");
  JumpingProfile out;
  out.dims.push_back(series.dim());
  for (long t = 1; out.dims.back() > 0; ++t) out.dims.push_back(vanishing_dim(series, val, t));
  const size_t dim = series.dim();
  out.jumps.assign(dim, 0);
  for (size_t t = 1; t < out.dims.size(); ++t)
    for (size_t j = 0; j < out.dims[t]; ++j) out.jumps[j] = static_cast<long>(t);
  for (long e : out.jumps) out.mass += Rational(e);
  return out;
}

long vanishing_order(const LinearSeries& series, const ValuationSpec& val) {
  if (series.dim() == 0) throw std::invalid_argument("vanishing order of the zero space");
  long t = 0;
  while (vanishing_dim(series, val, t + 1) == series.dim()) ++t;
  return t;
}

long max_jump(const LinearSeries& series, const ValuationSpec& val) {
  if (series.dim() == 0) throw std::invalid_argument("jumping numbers of the zero space");
  long lo = 0;
  long hi = valuation_bound(series, val);
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (vanishing_dim(series, val, mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace {

template <typename F>
FeketeResult asymptotic(const SeriesFamily& family, long max_level, Orientation orientation, F per_level) {
  std::vector<std::pair<long, Rational>> values;
  for (long k : family.levels(max_level)) {
    const LinearSeries v = family.level(k);
    if (v.dim() == 0) throw std::invalid_argument("V_" + std::to_string(k) + " is zero");
    values.emplace_back(k, Rational(per_level(v)));
  }
  if (values.empty()) throw std::invalid_argument("no integral level <= " + std::to_string(max_level));
  return fekete_limit(values, orientation);
}

}  // namespace

FeketeResult emax_asymptotic(const SeriesFamily& family, const ValuationSpec& val, long max_level) {
  return asymptotic(family, max_level, Orientation::Superadditive,
                    [&](const LinearSeries& v) { return max_jump(v, val); });
}

FeketeResult emin_asymptotic(const SeriesFamily& family, const ValuationSpec& val, long max_level) {
  return asymptotic(family, max_level, Orientation::Subadditive,
                    [&](const LinearSeries& v) { return vanishing_order(v, val); });
}

}  // namespace okb
