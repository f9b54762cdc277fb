#include "okb/properties.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "okb/flag_valuation.hpp"
#include "okb/filtration.hpp"
#include "okb/geometry.hpp"
#include "okb/linear_series.hpp"
#include "okb/okounkov_function.hpp"

namespace okb {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
  const long den = uniform(rng, 1, max_den);
  return Rational(uniform(rng, lo * den, hi * den), den);
}

bool proportional(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

Point random_projective_point(Rng& rng, size_t n, const std::vector<Point>& avoid) {
  while (true) {
    Point p;
    bool nonzero = false;
    for (size_t i = 0; i < n; ++i) {
      p.push_back(Rational(uniform(rng, -2, 2)));
      nonzero = nonzero || !p.back().is_zero();
    }
    if (!nonzero) continue;
    bool clash = false;
    for (const auto& q : avoid) clash = clash || proportional(p, q);
    if (!clash) return p;
  }
}

/// A family, a valuation on it and the largest level worth building.
struct Setup {
  int family_id;
  ValuationSpec val;
  long max_level;
};

const SeriesFamily& family_by_id(int id) {
  static const std::vector<SeriesFamily> families = {
      SeriesFamily(GeometrySpec::p1(), {1, {}}),
      SeriesFamily(GeometrySpec::p2(), {1, {}}),
      SeriesFamily(GeometrySpec::blowup({GeometrySpec::default_p1()}), {2, {1}}),
      SeriesFamily(GeometrySpec::blowup({GeometrySpec::default_p1(), GeometrySpec::generic_p2()}), {2, {1, 1}}),
  };
  return families.at(static_cast<size_t>(id));
}

Setup random_setup(Rng& rng) {
  const int id = static_cast<int>(uniform(rng, 0, 3));
  const GeometrySpec& g = family_by_id(id).geometry();
  const long max_level = id <= 1 ? 3 : 2;
  const long pick = uniform(rng, 0, 2);
  if (id >= 2 && pick == 0) {
    const long i = uniform(rng, 0, static_cast<long>(g.blown_up_points().size()) - 1);
    return {id, ValuationSpec::along_exceptional(static_cast<size_t>(i)), max_level};
  }
  if (id == 1 && pick == 1) {
    Polynomial form;
    while (form.is_zero()) {
      form = Polynomial();
      for (size_t v = 0; v < 3; ++v) {
        Polynomial x = Polynomial::variable(3, v);
        x *= Rational(uniform(rng, -2, 2));
        form += x;
      }
    }
    return {id, ValuationSpec::along_curve(form), max_level};
  }
  return {id, ValuationSpec::at_point(random_projective_point(rng, g.nvars(), g.blown_up_points())), max_level};
}

class SeriesCache {
 public:
  const LinearSeries& get(int id, long k) {
    const auto key = std::make_pair(id, k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, family_by_id(id).level(k)).first;
    return it->second;
  }

 private:
  std::map<std::pair<int, long>, LinearSeries> cache_;
};

std::vector<Rational> random_element(Rng& rng, const SectionSpace& space) {
  std::vector<Rational> coeffs(space.monomials().size());
  bool nonzero = false;
  for (const auto& b : space.basis()) {
    const Rational c(uniform(rng, -3, 3));
    if (c.is_zero()) continue;
    nonzero = true;
    for (size_t i = 0; i < b.size(); ++i) coeffs[i] += c * b[i];
  }
  if (!nonzero && space.dim() > 0) coeffs = space.basis()[static_cast<size_t>(uniform(rng, 0, static_cast<long>(space.dim()) - 1))];
  return coeffs;
}

std::string describe(const Setup& s, long k) {
  return family_by_id(s.family_id).divisor().str() + " on " + to_string(family_by_id(s.family_id).geometry().model()) +
         ", " + s.val.str() + ", level " + std::to_string(k);
}

using Case = std::function<std::optional<std::string>(Rng&, SeriesCache&)>;

std::optional<std::string> filtration_case(Rng& rng, SeriesCache& cache) {
  const Setup s = random_setup(rng);
  const long k = uniform(rng, 1, s.max_level);
  const LinearSeries& v = cache.get(s.family_id, k);
  const long bound = valuation_bound(v, s.val);
  const JumpingProfile jp = jumping_numbers(v, s.val);

  SectionSpace prev = subspace_with_vanishing(v, s.val, 0);
  if (prev.dim() != v.dim()) return "F_0 != V for " + describe(s, k);
  for (long t = 1; t <= bound; ++t) {
    const SectionSpace cur = subspace_with_vanishing(v, s.val, t);
    if (cur.dim() > prev.dim()) return "dim F_t increased at t=" + std::to_string(t) + " for " + describe(s, k);
    for (const auto& b : cur.basis())
      if (!prev.contains(b)) return "F_t not inside F_{t-1} at t=" + std::to_string(t) + " for " + describe(s, k);
    const size_t expected = static_cast<size_t>(t) < jp.dims.size() ? jp.dims[static_cast<size_t>(t)] : 0;
    if (cur.dim() != expected) return "jumping profile disagrees at t=" + std::to_string(t) + " for " + describe(s, k);
    size_t above = 0;
    for (long e : jp.jumps) above += e >= t ? 1 : 0;
    if (above != cur.dim()) return "jump count disagrees at t=" + std::to_string(t) + " for " + describe(s, k);
    prev = cur;
  }
  if (prev.dim() != 0) return "F_t nonzero at the bound for " + describe(s, k);

  const auto coeffs = random_element(rng, v.space());
  const Polynomial f = v.monomials().polynomial(coeffs);
  if (f.is_zero()) return std::nullopt;
  const long order = valuation_of(v, s.val, f);
  if (!subspace_with_vanishing(v, s.val, order).contains(coeffs) ||
      subspace_with_vanishing(v, s.val, order + 1).contains(coeffs))
    return "valuation_of inconsistent with F_t for " + describe(s, k);
  return std::nullopt;
}

std::optional<std::string> multiplicativity_case(Rng& rng, SeriesCache& cache) {
  const Setup s = random_setup(rng);
  const long m = uniform(rng, 1, s.max_level);
  const long n = uniform(rng, 1, s.max_level);
  const LinearSeries& vm = cache.get(s.family_id, m);
  const LinearSeries& vn = cache.get(s.family_id, n);
  const LinearSeries& vmn = cache.get(s.family_id, m + n);
  const long t = uniform(rng, 0, max_jump(vm, s.val));
  const long u = uniform(rng, 0, max_jump(vn, s.val));
  const SectionSpace ft = subspace_with_vanishing(vm, s.val, t);
  const SectionSpace fu = subspace_with_vanishing(vn, s.val, u);
  const Polynomial a = vm.monomials().polynomial(random_element(rng, ft));
  const Polynomial b = vn.monomials().polynomial(random_element(rng, fu));
  const Polynomial p = a * b;
  const std::string where = describe(s, m) + " times level " + std::to_string(n);
  if (!vmn.contains(p)) return "product leaves V_{m+n}: " + where;
  if (valuation_of(vmn, s.val, p) < t + u) return "product leaves F_{t+s}: " + where;
  const FlagVector na = flag_valuation(a, vm);
  const FlagVector nb = flag_valuation(b, vn);
  const FlagVector np = flag_valuation(p, vmn);
  for (size_t i = 0; i < np.entries.size(); ++i)
    if (np.entries[i] != na.entries[i] + nb.entries[i]) return "flag valuation not additive: " + where;
  return std::nullopt;
}

Point scaled_point(const std::vector<long>& v, long k) {
  Point p;
  for (long x : v) p.push_back(Rational(x, k));
  return p;
}

std::optional<std::string> midpoint_case(Rng& rng, SeriesCache& cache) {
  const Setup s = random_setup(rng);
  const long k = uniform(rng, 1, 2);
  const LinearSeries& vk = cache.get(s.family_id, k);
  const LinearSeries& v2k = cache.get(s.family_id, 2 * k);
  const auto attained = attained_vectors(vk.space());
  const auto& a = attained[static_cast<size_t>(uniform(rng, 0, static_cast<long>(attained.size()) - 1))];
  const auto& b = attained[static_cast<size_t>(uniform(rng, 0, static_cast<long>(attained.size()) - 1))];
  std::vector<long> sum(a.size());
  for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  const auto pa = phi_sample(vk, s.val, scaled_point(a, k));
  const auto pb = phi_sample(vk, s.val, scaled_point(b, k));
  const auto pm = phi_sample(v2k, s.val, scaled_point(sum, 2 * k));
  if (!pa || !pb) return "attained vector has no sample: " + describe(s, k);
  if (!pm) return "midpoint not attained at level 2k: " + describe(s, k);
  if (pm->value < (pa->value + pb->value) / Rational(2))
    return "midpoint " + to_string(pm->v) + " below the average: " + describe(s, k);
  return std::nullopt;
}

std::vector<Point> random_points(Rng& rng, size_t dim, size_t count) {
  std::vector<Point> pts;
  for (size_t i = 0; i < count; ++i) {
    Point p;
    for (size_t d = 0; d < dim; ++d) p.push_back(random_rational(rng, -4, 4, 3));
    pts.push_back(std::move(p));
  }
  return pts;
}

std::optional<std::string> hull_case(Rng& rng, SeriesCache&) {
  const size_t dim = static_cast<size_t>(uniform(rng, 1, 3));
  const auto pts = random_points(rng, dim, static_cast<size_t>(uniform(rng, 1, 12)));
  const Polytope p = Polytope::hull(pts, dim);
  const Polytope again = Polytope::hull(p.vertices(), dim);
  if (!(again == p)) return "hull not idempotent on " + std::to_string(pts.size()) + " points in R^" + std::to_string(dim);
  if (again.volume() != p.volume()) return "volume changed under re-hulling";
  for (const auto& x : pts)
    if (!p.contains(x)) return "input point " + to_string(x) + " outside its hull";
  return std::nullopt;
}

Point convex_combination(Rng& rng, const std::vector<Point>& vertices) {
  std::vector<long> w(vertices.size());
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) total += (x = uniform(rng, 0, 3));
  }
  Point p(vertices.front().size());
  for (size_t i = 0; i < vertices.size(); ++i) p = p + Rational(w[i], total) * vertices[i];
  return p;
}

std::optional<std::string> envelope_case(Rng& rng, SeriesCache&) {
  const size_t dim = static_cast<size_t>(uniform(rng, 1, 2));
  Polytope domain;
  do {
    domain = Polytope::hull(random_points(rng, dim, static_cast<size_t>(uniform(rng, 2, 6))), dim);
  } while (!domain.full_dimensional());
  std::vector<Sample> samples;
  Rational top(0);
  const long count = uniform(rng, 1, 8);
  for (long i = 0; i < count; ++i) {
    samples.push_back({convex_combination(rng, domain.vertices()), random_rational(rng, 0, 5, 4)});
    top = max(top, samples.back().value);
  }
  const ConcavePL f = concave_envelope(samples, domain);
  for (const auto& s : samples)
    if (f(s.point) < s.value) return "envelope below sample " + to_string(s.point);
  for (const auto& v : domain.vertices())
    if (f(v).sign() < 0) return "envelope negative at vertex " + to_string(v);
  for (const auto& piece : f.pieces())
    for (const auto& v : piece.cell.vertices())
      if (f(v) > top) return "envelope exceeds the largest sample at " + to_string(v);
  const auto& a = samples[static_cast<size_t>(uniform(rng, 0, count - 1))].point;
  const auto& b = samples[static_cast<size_t>(uniform(rng, 0, count - 1))].point;
  if (f(Rational(1, 2) * (a + b)) < (f(a) + f(b)) / Rational(2)) return "envelope not concave on a sampled chord";
  return std::nullopt;
}

const std::map<std::string, Case>& suites() {
  static const std::map<std::string, Case> table = {
      {"filtration-axioms", filtration_case},
      {"multiplicativity", multiplicativity_case},
      {"midpoint-superadditivity", midpoint_case},
      {"hull-idempotence", hull_case},
      {"envelope-dominates-samples", envelope_case},
  };
  return table;
}

}  // namespace

std::vector<std::string> property_suite_names() {
  return {"filtration-axioms", "multiplicativity", "midpoint-superadditivity", "hull-idempotence",
          "envelope-dominates-samples"};
}

PropertyReport run_property_suite(const std::string& name, std::size_t cases, std::uint64_t seed) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown property suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.name = name;
  report.cases = cases;
  Rng rng(seed);
  SeriesCache cache;
  for (std::size_t i = 0; i < cases; ++i) {
    std::optional<std::string> failure;
    try {
      failure = it->second(rng, cache);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      if (report.failures == 0) report.first_failure = "case " + std::to_string(i) + ": " + *failure;
      ++report.failures;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace okb
