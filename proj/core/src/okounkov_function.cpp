#include "okb/okounkov_function.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "okb/filtration.hpp"
#include "okb/flag_valuation.hpp"

namespace okb {

namespace {

Matrix unit_rows(size_t upto, size_t n) {
  std::vector<std::vector<Rational>> rows;
  for (size_t j = 0; j < upto; ++j) {
    std::vector<Rational> r(n);
    r[j] = 1;
    rows.push_back(std::move(r));
  }
  return Matrix(std::move(rows), n);
}

std::optional<std::vector<long>> scaled_key(const Point& v, long k) {
  std::vector<long> key;
  for (const auto& c : v) {
    const Rational kc = Rational(k) * c;
    if (!kc.is_integer() || kc.sign() < 0) return std::nullopt;
    key.push_back(kc.num().get_si());
  }
  return key;
}

}  // namespace

std::optional<FunctionSample> phi_sample(const LinearSeries& series, const ValuationSpec& val, const Point& v) {
  if (v.size() != series.geometry().rank()) throw std::invalid_argument("v has the wrong dimension");
  const auto key = scaled_key(v, series.level());
  if (!key) return std::nullopt;
  const auto idx = series.monomials().index_of_key(*key);
  if (!idx) return std::nullopt;

  const size_t n = series.monomials().size();
  const Matrix at_least = series.space().conditions().stacked(unit_rows(*idx, n));
  const Matrix beyond = series.space().conditions().stacked(unit_rows(*idx + 1, n));
  const auto feasible = [&](long t) {
    const Matrix c = valuation_conditions(series, val, t);
    return solution_dim(at_least.stacked(c)) > solution_dim(beyond.stacked(c));
  };
  if (!feasible(0)) return std::nullopt;
  long lo = 0;
  long hi = valuation_bound(series, val);
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return FunctionSample{v, series.level(), lo, Rational(lo, series.level())};
}

std::optional<FunctionSample> phi_sample(const SeriesFamily& family, const ValuationSpec& val, const Point& v, long k) {
  if (!family.integral_at(k)) return std::nullopt;
  return phi_sample(family.level(k), val, v);
}

std::vector<FunctionSample> level_samples(const LinearSeries& series, const ValuationSpec& val) {
  std::map<size_t, long> best;
  const long bound = valuation_bound(series, val);
  for (long t = 0; t < bound; ++t) {
    const SectionSpace f = subspace_with_vanishing(series, val, t);
    if (f.dim() == 0) break;
    for (size_t lead : f.leads()) best[lead] = t;
  }
  std::vector<FunctionSample> out;
  const long k = series.level();
  for (const auto& [lead, t] : best) {
    Point v;
    for (long e : series.monomials().key(lead)) v.emplace_back(e, k);
    out.push_back({std::move(v), k, t, Rational(t, k)});
  }
  return out;
}

FunctionApprox okounkov_function_envelope(const SeriesFamily& family, const ValuationSpec& val, long max_level) {
  OkounkovBodyApprox body = okounkov_body(family, max_level);
  std::vector<FunctionSample> samples;
  for (long k : family.levels(max_level)) {
    auto level = level_samples(family.level(k), val);
    samples.insert(samples.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  std::vector<Sample> points;
  points.reserve(samples.size());
  for (const auto& s : samples) points.push_back({s.v, s.value});
  ConcavePL f = concave_envelope(std::move(points), body.body);
  return {std::move(f), std::move(body), std::move(samples), max_level};
}

SliceFunction::SliceFunction(Polytope body, std::vector<std::pair<Rational, std::optional<Polytope>>> slices)
    : body_(std::move(body)), slices_(std::move(slices)) {
  std::sort(slices_.begin(), slices_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

Rational SliceFunction::operator()(const Point& x) const {
  if (!body_.contains(x)) throw std::invalid_argument("point " + to_string(x) + " is outside the body");
  Rational best;
  for (const auto& [t, slice] : slices_)
    if (slice && slice->contains(x)) best = max(best, t);
  return best;
}

SliceFunction okounkov_function_slices(const SeriesFamily& family, const ValuationSpec& val, long max_level,
                                       std::vector<Rational> t_grid) {
  OkounkovBodyApprox body = okounkov_body(family, max_level);
  std::vector<std::pair<Rational, std::optional<Polytope>>> slices;
  for (auto& t : t_grid) {
    if (t.sign() < 0) throw std::invalid_argument("slice grid values must be non-negative");
    auto s = slice_body(family, val, t, max_level);
    slices.emplace_back(std::move(t), s ? std::optional<Polytope>(std::move(s->body)) : std::nullopt);
  }
  return SliceFunction(std::move(body.body), std::move(slices));
}

std::vector<Rational> farey_grid(long denominator_bound, const Rational& upper) {
  if (denominator_bound < 1) throw std::invalid_argument("denominator bound must be positive");
  std::vector<Rational> out;
  for (long q = 1; q <= denominator_bound; ++q) {
    const long top = (upper * Rational(q)).floor().get_si();
    for (long p = 0; p <= top; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IdentityReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.skipped || c.residual().is_zero(); });
}

size_t IdentityReport::evaluated() const {
  return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.skipped; }));
}

long flag_divisor_value(const SeriesFamily& family, const ValuationSpec& val) {
  const GeometrySpec& g = family.geometry();
  if (g.model() == Model::P1) throw std::invalid_argument("the reduction identity needs a surface");
  if (family.divisor().degree != Rational(1) ||
      std::any_of(family.divisor().multiplicities.begin(), family.divisor().multiplicities.end(),
                  [](const Rational& l) { return !l.is_zero(); }))
    throw std::invalid_argument("the flag line must be a member of the linear system (D = H)");
  return valuation_of(family.level(1), val, g.flag_divisor());
}

IdentityReport check_reduction(const FunctionApprox& f, long nu_y1, const std::vector<Point>& samples) {
  IdentityReport out;
  for (const auto& x : samples) {
    IdentityCheck c{x, {}, {}, false};
    if (x.empty() || x.front() == Rational(1)) {
      c.skipped = true;
      out.checks.push_back(std::move(c));
      continue;
    }
    const Rational x1 = x.front();
    const Rational scale = (Rational(1) - x1).inverse();
    Point y(x.size());
    for (size_t i = 1; i < x.size(); ++i) y[i] = x[i] * scale;
    c.lhs = f(x);
    c.rhs = (Rational(1) - x1) * f(y) + x1 * Rational(nu_y1);
    out.checks.push_back(std::move(c));
  }
  return out;
}

IdentityReport check_reduction(const SeriesFamily& family, const ValuationSpec& val, const std::vector<Point>& samples,
                               long max_level) {
  const long nu = flag_divisor_value(family, val);
  return check_reduction(okounkov_function_envelope(family, val, max_level), nu, samples);
}

IdentityReport check_homogeneity(const SeriesFamily& family, const ValuationSpec& val, long m,
                                 const std::vector<Point>& samples, long max_level) {
  if (m < 1) throw std::invalid_argument("homogeneity factor must be positive");
  const FunctionApprox f = okounkov_function_envelope(family, val, max_level);
  const FunctionApprox fm = okounkov_function_envelope(family.veronese(m), val, max_level);
  IdentityReport out;
  for (const auto& x : samples) {
    IdentityCheck c{x, f(x), fm(Rational(m) * x) / Rational(m), false};
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace okb
