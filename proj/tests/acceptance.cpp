#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "okb/boundary.hpp"
#include "okb/filtration.hpp"
#include "okb/golden.hpp"
#include "okb/integrals.hpp"
#include "okb/okounkov_function.hpp"
#include "okb/properties.hpp"
#include "okb/scenario.hpp"
#include "okb/semigroup.hpp"

using namespace okb;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

std::vector<Point> sample_points(const Polytope& body, size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(0, 5);
  std::vector<Point> out;
  const auto& v = body.vertices();
  while (out.size() < count) {
    std::vector<long> w(v.size());
    long total = 0;
    for (auto& x : w) total += (x = weight(rng));
    if (total == 0) continue;
    Point p(v.front().size());
    for (size_t i = 0; i < v.size(); ++i) p = p + Rational(w[i], total) * v[i];
    out.push_back(std::move(p));
  }
  return out;
}

void bodies(Outcome& out) {
  const std::vector<std::pair<std::string, long>> cases = {
      {"p2-deg2", 2}, {"blowup1", 4}, {"blowup2-generic", 6}, {"blowup2-collinear", 6}};
  for (const auto& [name, level] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const Scenario s = builtin_scenario(name);
    OkounkovBodyApprox b = okounkov_body(*s.family, level);
    out.require(b.certify(*s.expected_body), name + " vertex set");
    const double t = seconds_since(start);
    out.require(t < 10.0, name + " runtime");
    out.note << name << " " << t << "s ";
  }
}

void functions(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  for (const char* name : {"p2-ordP0", "p2-ordP1", "blowup1-function"}) {
    const Scenario s = builtin_scenario(name);
    const ConcavePL& truth = *s.expected_function;
    const FunctionApprox f = okounkov_function_envelope(*s.family, *s.valuation, s.max_level);
    size_t top_level = 0;
    for (const auto& x : f.samples) {
      out.require(x.value == truth(x.v), std::string(name) + " sample at " + to_string(x.v));
      if (x.level == s.max_level) ++top_level;
    }
    out.require(top_level > 0, std::string(name) + " has top-level samples");
    out.require(golden::same_function(f.function, truth), std::string(name) + " envelope");
  }
  const Scenario b = builtin_scenario("blowup1-function");
  out.require(b.max_level == 8 && *b.family->divisor().multiplicities.begin() == Rational(1, 2), "blow-up at 1/2, K=8");
  const auto upper = golden::blowup_order_off_lines(Rational(1, 2));
  for (const auto& x : {pt({0, 1}), pt({0, 2}), pt({1, 0})}) {
    const Point q = Rational(1, 2) * x;
    out.require(upper(q) == Rational(2) - Rational(2) * q[0] - q[1] - Rational(1, 2), "upper piece formula");
  }
  const double t = seconds_since(start);
  out.require(t < 60.0, "runtime");
  out.note << t << "s";
}

void curves(Outcome& out) {
  for (const char* name : {"p1-curve", "p1-curve-q"}) {
    const Scenario s = builtin_scenario(name);
    const FunctionApprox f = okounkov_function_envelope(*s.family, *s.valuation, 6);
    out.require(golden::same_function(f.function, *s.expected_function), name);
    for (long i = 0; i <= 6; ++i) {
      const Point x = make_point({Rational(i, 6)});
      const Rational want = std::string(name) == "p1-curve" ? Rational(i, 6) : Rational(6 - i, 6);
      out.require(f(x) == want, std::string(name) + " at " + to_string(x));
    }
  }
}

void integral_formula(Outcome& out) {
  const std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  const auto scan = family_scan(golden::blowup_family(), grid, 8);
  for (size_t i = 0; i < grid.size(); ++i) {
    const Rational& l = grid[i];
    const Rational formula = Rational(1, 3) - l * l / Rational(2) + l * l * l / Rational(6);
    const ScanEntry& e = scan[i];
    out.require(!e.flagged && e.closed_form && *e.closed_form == formula, "closed form at " + l.str());
    out.require(e.truncated && (e.truncated->integral - formula).abs() <= Rational(1, 8), "K=8 truncation at " + l.str());
    out.note << l.str() << "->" << formula.str() << " ";
  }
}

void mass(Outcome& out) {
  const SeriesFamily plane(GeometrySpec::p2(), {1, {}});
  Rational worst_excess(-1);
  long worst_k = 0;
  for (const auto& [k, m] : mass_sequence(plane, ValuationSpec::at_point(GeometrySpec::default_p1()), 10, 30)) {
    const Rational excess = (m - Rational(1, 3)).abs() - Rational(1, k);
    if (excess > worst_excess) {
      worst_excess = excess;
      worst_k = k;
    }
    out.require(excess <= Rational(0), "|mass/k^3 - 1/3| <= 1/k at k=" + std::to_string(k));
  }
  out.note << "largest excess over 1/k is " << worst_excess.str() << " at k=" << worst_k;
}

void identities(Outcome& out) {
  for (const char* name : {"p2-ordP0", "p2-ordP1", "p2-deg2"}) {
    const Scenario s = builtin_scenario(name);
    const auto pts = sample_points(okounkov_body(*s.family, s.max_level).body, 20, 20240601);
    for (long m = 1; m <= 3; ++m) {
      const IdentityReport r = check_homogeneity(*s.family, *s.valuation, m, pts, s.max_level);
      out.require(r.holds() && r.evaluated() == 20, std::string(name) + " homogeneity m=" + std::to_string(m));
    }
  }
  for (const auto& [name, nu] : {std::pair{"p2-ordP0", 1L}, std::pair{"p2-ordP1", 0L}}) {
    const Scenario s = builtin_scenario(name);
    out.require(flag_divisor_value(*s.family, *s.valuation) == nu, std::string(name) + " nu(Y1)");
    const auto pts = sample_points(okounkov_body(*s.family, s.max_level).body, 20, 7);
    const IdentityReport r = check_reduction(*s.family, *s.valuation, pts, s.max_level);
    size_t zero = 0;
    for (const auto& c : r.checks)
      if (!c.skipped && c.residual() == Rational(0)) ++zero;
    out.require(r.holds() && zero == r.evaluated() && zero >= 18, std::string(name) + " reduction");
    out.note << name << " " << zero << " residuals 0; ";
  }
}

void jumping(Outcome& out) {
  const Scenario s = builtin_scenario("p2-ordP0");
  const JumpingProfile j = jumping_numbers(s.family->level(1), *s.valuation);
  out.require(j.jumps == std::vector<long>{1, 1, 0}, "jumps");
  out.require(j.mass == Rational(2), "mass");
}

void equivalence(Outcome& out) {
  for (const char* name : {"p2-ordP0", "p1-curve"}) {
    const Scenario s = builtin_scenario(name);
    const FunctionApprox f = okounkov_function_envelope(*s.family, *s.valuation, s.max_level);
    Rational top(0);
    for (const auto& x : f.samples) top = max(top, x.value);
    const SliceFunction psi = okounkov_function_slices(*s.family, *s.valuation, s.max_level, farey_grid(6, top));
    Rational worst(0);
    for (const auto& x : distinct_points(valuation_points(*s.family, s.max_level))) worst = max(worst, (f(x) - psi(x)).abs());
    out.require(worst <= Rational(1, 6), name);
    out.note << name << " " << worst.str() << " ";
  }
}

void discontinuity(Outcome& out) {
  const Scenario disk = builtin_scenario("disk-demo");
  const WitnessReport w = discontinuity_witness(*disk.body, disk.center, 10);
  out.require(w.discontinuity_certified && !w.locally_cone && !is_locally_cone(*disk.body, disk.center), "disk witness");
  out.require(w.value_at_center.exact() && w.value_at_center.lo == Rational(1), "value 1 at p");
  out.require(w.probes.size() == 10, "10 probes");
  for (size_t i = 0; i < w.probes.size(); ++i) {
    const Probe& p = w.probes[i];
    out.require(p.value.exact() && p.value.lo == Rational(0), "probe value 0");
    if (i > 0) out.require(p.distance2 < w.probes[i - 1].distance2, "distances decrease");
  }
  const Scenario square = builtin_scenario("square-demo");
  const WitnessReport c = discontinuity_witness(*square.body, square.center, 10);
  out.require(c.continuity_certified && !c.discontinuity_certified, "square continuity");
}

void appendix(Outcome& out) {
  out.require(gordan_gap(DiscreteSemigroup({{2}, {3}}), {30}).gaps == std::vector<LatticePoint>{{1}}, "<2,3>");
  out.require(gordan_gap(DiscreteSemigroup({{3}, {5}}), {30}).gaps == std::vector<LatticePoint>{{1}, {2}, {4}, {7}},
              "<3,5>");
  const DiscreteSemigroup n2({{1, 0}, {0, 1}});
  const HatfEstimate h = hatf_estimate(n2, builtin_function("ceil-norm"), pt({3, 4}), ray_schedule(pt({3, 4}), 32));
  out.require(h.lo <= Rational(5) && Rational(5) <= h.hi && h.width() <= Rational(1, 32), "hatf brackets 5");
  const LatticeFunction square = [](const LatticePoint& u) {
    long s = 0;
    for (long x : u) s += x;
    return Rational(s * s);
  };
  bool fired = false;
  try {
    check_subadditive(n2, square, {6, 6}, 100, 20240601);
  } catch (const SubadditivityViolation&) {
    fired = true;
  }
  out.require(fired, "violation detector");
}

void properties(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : property_suite_names()) {
    const PropertyReport r = run_property_suite(name, 1000, 20240601);
    out.require(r.cases == 1000 && r.passed(), name + ": " + r.first_failure);
    out.note << name << " " << r.failures << "/" << r.cases << " ";
  }
  const double t = seconds_since(start);
  out.require(t < 300.0, "runtime");
  out.note << t << "s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"okounkov bodies", bodies},
      {"okounkov functions", functions},
      {"curve functions", curves},
      {"integral formula", integral_formula},
      {"mass convergence", mass},
      {"structural identities", identities},
      {"jumping numbers", jumping},
      {"envelope vs slices", equivalence},
      {"discontinuity demo", discontinuity},
      {"semigroup suite", appendix},
      {"property suites", properties},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.note << "exception: " << e.what();
    }
    if (!out.ok) ++failed;
    std::printf("%s %zu %s: %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), out.note.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
