#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "artifacts.hpp"
#include "okb/golden.hpp"
#include "okb/okounkov_body.hpp"
#include "okb/properties.hpp"
#include "okb/scenario.hpp"

namespace {

using namespace okb;
using io::ordered_json;

/// A golden answer the run disagreed with.
struct GoldenMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string scenario;
  std::string config;
  std::optional<long> max_level;
  std::optional<long> t_denominator_bound;
  std::string lambda_grid;
  std::string lambda;
  std::string out;
  std::string svg;
  std::optional<size_t> probes;
  std::uint64_t seed = 20240601;
  size_t cases = 1000;
  std::string point;
  std::optional<long> level;
  std::string suite;
};

Scenario resolve(const Options& o) {
  if (!o.scenario.empty() && !o.config.empty()) throw std::invalid_argument("--scenario and --config are exclusive");
  Scenario s;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw std::invalid_argument("cannot read config file '" + o.config + "'");
    std::stringstream text;
    text << in.rdbuf();
    s = scenario_from_config(text.str());
  } else if (!o.scenario.empty()) {
    std::optional<Rational> lambda;
    if (!o.lambda.empty()) lambda = Rational::parse(o.lambda);
    s = builtin_scenario(o.scenario, lambda);
  } else {
    throw std::invalid_argument("a --scenario or --config is required");
  }
  if (o.max_level) {
    if (*o.max_level < 1) throw std::invalid_argument("--max-level must be positive");
    s.max_level = *o.max_level;
  }
  if (o.t_denominator_bound) {
    if (*o.t_denominator_bound < 1) throw std::invalid_argument("--t-denominator-bound must be positive");
    s.t_denominator_bound = *o.t_denominator_bound;
  }
  if (!o.lambda_grid.empty()) s.lambda_grid = parse_rational_list(o.lambda_grid);
  if (o.probes) s.probes = *o.probes;
  return s;
}

void require_series(const Scenario& s) {
  if (s.kind != ScenarioKind::Series || !s.family || !s.valuation)
    throw std::invalid_argument("scenario '" + s.name + "' is a " + to_string(s.kind) + " scenario, not a linear series");
}

void write(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

void emit(const Options& o, const ordered_json& j) { write(o.out, j.dump(2) + "\n"); }

void expect(bool ok, const std::string& what) {
  if (!ok) throw GoldenMismatch(what);
}

ordered_json header(const Scenario& s) {
  ordered_json j = {{"scenario", s.name}, {"kind", to_string(s.kind)}};
  if (s.family) j["divisor"] = s.family->divisor().str();
  if (s.valuation) j["valuation"] = s.valuation->str();
  return j;
}

std::vector<Point> sample_points(const Polytope& body, size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(0, 4);
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

int cmd_body(const Options& o) {
  const Scenario s = resolve(o);
  require_series(s);
  OkounkovBodyApprox b = okounkov_body(*s.family, s.max_level);
  if (s.expected_body) b.certify(*s.expected_body);
  ordered_json j = header(s);
  j["max_level"] = b.max_level;
  j["exact"] = b.exact;
  j["body"] = io::to_json(b.body);
  emit(o, j);
  if (!o.svg.empty()) write(o.svg, io::polytope_svg(b.body, distinct_points(valuation_points(*s.family, s.max_level))));
  if (s.expected_body) expect(b.exact, "body differs from the golden polygon");
  return 0;
}

int cmd_function(const Options& o) {
  const Scenario s = resolve(o);
  require_series(s);
  const FunctionApprox f = okounkov_function_envelope(*s.family, *s.valuation, s.max_level);
  ordered_json samples = ordered_json::array();
  for (const auto& x : f.samples)
    samples.push_back({{"v", io::to_json(x.v)}, {"level", x.level}, {"t", x.t}, {"value", io::to_json(x.value)}});
  ordered_json j = header(s);
  j["max_level"] = f.max_level;
  j["function"] = io::to_json(f.function);
  j["samples"] = samples;
  emit(o, j);
  if (!o.svg.empty()) write(o.svg, io::function_svg(f.function));
  if (s.expected_function) expect(golden::same_function(f.function, *s.expected_function), "function differs from the golden answer");
  return 0;
}

int cmd_sample(const Options& o) {
  const Scenario s = resolve(o);
  require_series(s);
  if (o.point.empty()) throw std::invalid_argument("sample needs --point");
  const long k = o.level.value_or(s.family->step());
  const auto r = phi_sample(*s.family, *s.valuation, parse_point(o.point), k);
  ordered_json j = header(s);
  j["level"] = k;
  j["point"] = io::to_json(parse_point(o.point));
  if (r) {
    j["attained"] = true;
    j["t"] = r->t;
    j["value"] = io::to_json(r->value);
  } else {
    j["attained"] = false;
  }
  emit(o, j);
  return 0;
}

int cmd_integral(const Options& o) {
  const Scenario s = resolve(o);
  if (s.kind == ScenarioKind::FamilyScan) {
    if (s.lambda_grid.empty()) throw std::invalid_argument("family scans need a --lambda-grid");
    const auto scan = family_scan(golden::blowup_family(), s.lambda_grid, s.max_level);
    if (o.out.size() >= 4 && o.out.substr(o.out.size() - 4) == ".csv") {
      write(o.out, io::scan_csv(scan));
    } else {
      ordered_json rows = ordered_json::array();
      for (const auto& e : scan) {
        ordered_json row = {{"lambda", io::to_json(e.lambda)}, {"flagged", e.flagged}};
        if (e.flagged) row["reason"] = e.reason;
        if (e.closed_form) row["closed_form"] = io::to_json(*e.closed_form);
        if (e.truncated) row["truncated"] = io::to_json(*e.truncated);
        rows.push_back(row);
      }
      ordered_json j = header(s);
      j["max_level"] = s.max_level;
      j["scan"] = rows;
      if (auto lip = observed_lipschitz(scan)) j["observed_lipschitz"] = io::to_json(*lip);
      emit(o, j);
    }
    for (const auto& e : scan)
      if (!e.flagged) expect(e.closed_form && *e.closed_form == golden::blowup_integral(e.lambda), "closed-form integral differs at lambda=" + e.lambda.str());
    return 0;
  }
  require_series(s);
  const IntegralReport r = integral(*s.family, *s.valuation, s.max_level);
  ordered_json j = header(s);
  j["report"] = io::to_json(r);
  if (s.expected_function) j["closed_form"] = io::to_json(integrate(*s.expected_function));
  emit(o, j);
  if (s.expected_integral && s.expected_function) expect(integrate(*s.expected_function) == *s.expected_integral, "closed-form integral differs");
  return 0;
}

int cmd_jumping(const Options& o) {
  const Scenario s = resolve(o);
  require_series(s);
  const long k = o.level.value_or(s.family->step());
  const JumpingProfile jp = jumping_numbers(s.family->level(k), *s.valuation);
  ordered_json j = header(s);
  j["level"] = k;
  j["profile"] = io::to_json(jp);
  j["e_max_asymptotic"] = io::to_json(emax_asymptotic(*s.family, *s.valuation, s.max_level));
  j["e_min_asymptotic"] = io::to_json(emin_asymptotic(*s.family, *s.valuation, s.max_level));
  emit(o, j);
  if (s.expected_jumps && k == s.family->step()) expect(jp.jumps == *s.expected_jumps, "jumping numbers differ from the golden answer");
  return 0;
}

int cmd_slices(const Options& o) {
  const Scenario s = resolve(o);
  require_series(s);
  const FunctionApprox f = okounkov_function_envelope(*s.family, *s.valuation, s.max_level);
  Rational top(0);
  for (const auto& x : f.samples) top = max(top, x.value);
  const auto grid = farey_grid(s.t_denominator_bound, top);
  const SliceFunction psi = okounkov_function_slices(*s.family, *s.valuation, s.max_level, grid);
  ordered_json slices = ordered_json::array();
  for (const auto& [t, body] : psi.slices()) {
    ordered_json row = {{"t", io::to_json(t)}};
    row["body"] = body ? io::to_json(*body) : ordered_json(nullptr);
    slices.push_back(row);
  }
  Rational worst(0);
  ordered_json compare = ordered_json::array();
  for (const auto& x : distinct_points(valuation_points(*s.family, s.max_level))) {
    const Rational a = f(x);
    const Rational b = psi(x);
    worst = max(worst, (a - b).abs());
    compare.push_back({{"x", io::to_json(x)}, {"envelope", io::to_json(a)}, {"slice", io::to_json(b)}});
  }
  ordered_json j = header(s);
  j["max_level"] = s.max_level;
  j["t_denominator_bound"] = s.t_denominator_bound;
  j["slices"] = slices;
  j["comparison"] = compare;
  j["max_deviation"] = io::to_json(worst);
  emit(o, j);
  return 0;
}

int cmd_identities(const Options& o) {
  const Scenario s = resolve(o);
  require_series(s);
  const Polytope body = okounkov_body(*s.family, s.max_level).body;
  const auto pts = sample_points(body, 20, o.seed);
  ordered_json homogeneity = ordered_json::object();
  bool ok = true;
  for (long m = 1; m <= 3; ++m) {
    const IdentityReport r = check_homogeneity(*s.family, *s.valuation, m, pts, s.max_level);
    ok = ok && r.holds();
    homogeneity[std::to_string(m)] = io::to_json(r);
  }
  ordered_json j = header(s);
  j["max_level"] = s.max_level;
  j["homogeneity"] = homogeneity;
  if (s.family->geometry().model() == Model::P2 && s.family->divisor().degree == Rational(1)) {
    const IdentityReport r = check_reduction(*s.family, *s.valuation, pts, s.max_level);
    ok = ok && r.holds();
    j["nu_flag_line"] = flag_divisor_value(*s.family, *s.valuation);
    j["reduction"] = io::to_json(r);
  }
  emit(o, j);
  expect(ok, "an identity has a nonzero residual");
  return 0;
}

int cmd_witness(const Options& o) {
  const Scenario s = resolve(o);
  if (s.kind != ScenarioKind::Boundary || !s.body) throw std::invalid_argument("witness needs a boundary scenario");
  const WitnessReport w = discontinuity_witness(*s.body, s.center, s.probes);
  ordered_json j = header(s);
  j["center"] = io::to_json(s.center);
  j["report"] = io::to_json(w);
  emit(o, j);
  if (!o.svg.empty()) write(o.svg, io::witness_svg(*s.body, s.center, w));
  if (s.expected_discontinuity)
    expect(*s.expected_discontinuity ? w.discontinuity_certified : w.continuity_certified, "witness not certified");
  return 0;
}

int cmd_semigroup(const Options& o) {
  const Scenario s = resolve(o);
  if (s.generators.empty()) throw std::invalid_argument("semigroup needs generators");
  const DiscreteSemigroup sg(s.generators);
  const LatticePoint box = s.box.empty() ? LatticePoint(sg.dim(), 20) : s.box;
  const GapReport g = gordan_gap(sg, box);
  ordered_json gaps = ordered_json::array();
  for (const auto& x : g.gaps) gaps.push_back(io::to_json(x));
  ordered_json basis = ordered_json::array();
  for (const auto& row : sg.group_basis()) {
    ordered_json r = ordered_json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    basis.push_back(r);
  }
  ordered_json j = header(s);
  j["generators"] = s.generators;
  j["group_basis"] = basis;
  j["box"] = box;
  j["gaps"] = gaps;
  j["stable"] = g.stable;
  emit(o, j);
  if (s.expected_gaps) expect(g.gaps == *s.expected_gaps, "gap set differs from the golden answer");
  return 0;
}

int cmd_fekete(const Options& o) {
  const Scenario s = resolve(o);
  if (s.generators.empty() || s.target.empty()) throw std::invalid_argument("fekete needs generators and a target");
  const DiscreteSemigroup sg(s.generators);
  const LatticeFunction f = builtin_function(s.function, s.function_params);
  const LatticePoint box = s.box.empty() ? LatticePoint(sg.dim(), 8) : s.box;
  ordered_json j = header(s);
  try {
    check_subadditive(sg, f, box, 200, o.seed);
    j["subadditive_on_samples"] = true;
  } catch (const SubadditivityViolation& v) {
    j["subadditive_on_samples"] = false;
    j["violation"] = {{"u", v.u()}, {"v", v.v()}};
  }
  const HatfEstimate h = hatf_estimate(sg, f, s.target, ray_schedule(s.target, s.steps));
  j["function"] = s.function;
  j["target"] = io::to_json(s.target);
  j["steps"] = s.steps;
  j["estimate"] = io::to_json(h.estimate);
  j["bracket"] = {io::to_json(h.lo), io::to_json(h.hi)};
  emit(o, j);
  if (s.expected_limit)
    expect(h.lo <= *s.expected_limit && *s.expected_limit <= h.hi && h.width() <= Rational(1, s.steps),
           "bracket misses the golden limit");
  return 0;
}

int cmd_golden(const Options& o) {
  std::vector<Scenario> list;
  if (o.scenario.empty() && o.config.empty()) {
    for (const auto& n : builtin_scenario_names()) list.push_back(builtin_scenario(n));
  } else {
    list.push_back(resolve(o));
  }
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (const auto& s : list) {
    for (const auto& c : golden_checks(s)) {
      ok = ok && c.passed;
      rows.push_back({{"scenario", s.name}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
  }
  emit(o, {{"checks", rows}, {"all_passed", ok}});
  expect(ok, "golden check failed");
  return 0;
}

int cmd_properties(const Options& o) {
  std::vector<std::string> names = o.suite.empty() ? property_suite_names() : std::vector<std::string>{o.suite};
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (const auto& n : names) {
    const PropertyReport r = run_property_suite(n, o.cases, o.seed);
    ok = ok && r.passed();
    ordered_json row = {{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.passed()) row["first_failure"] = r.first_failure;
    rows.push_back(row);
  }
  emit(o, {{"seed", o.seed}, {"suites", rows}, {"all_passed", ok}});
  expect(ok, "property suite failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Okounkov bodies, Okounkov functions and their integrals, computed exactly"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--scenario", o.scenario, "built-in scenario name");
  app.add_option("--config", o.config, "scenario config file (key = value sections)");
  app.add_option("--max-level", o.max_level, "level budget K");
  app.add_option("--t-denominator-bound", o.t_denominator_bound, "denominator bound of the slice t-grid");
  app.add_option("--lambda-grid", o.lambda_grid, "comma-separated parameters for family scans");
  app.add_option("--lambda", o.lambda, "parameter of the blowup1 scenarios");
  app.add_option("--out", o.out, "output file (stdout if omitted)");
  app.add_option("--svg", o.svg, "SVG drawing");
  app.add_option("--probes", o.probes, "number of boundary probes");
  app.add_option("--seed", o.seed, "seed for randomized suites and sample points");

  int (*selected)(const Options&) = nullptr;
  const auto add = [&](const char* name, const char* help, int (*run)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&selected, run] { selected = run; });
    return sub;
  };
  add("body", "Okounkov body of a linear series", cmd_body);
  add("function", "Okounkov function as a concave envelope", cmd_function);
  CLI::App* sample = add("sample", "one value of the pre-function", cmd_sample);
  sample->add_option("--point", o.point, "normalized valuation vector, e.g. 1/3,1/3")->required();
  sample->add_option("--level", o.level, "level k");
  add("integral", "integral of the Okounkov function, or a family scan", cmd_integral);
  CLI::App* jumping = add("jumping", "jumping numbers and their asymptotics", cmd_jumping);
  jumping->add_option("--level", o.level, "level k");
  add("slices", "slice bodies and their agreement with the envelope", cmd_slices);
  add("identities", "homogeneity and reduction identities", cmd_identities);
  add("witness", "boundary (dis)continuity witness", cmd_witness);
  add("semigroup", "group, gaps and regularization", cmd_semigroup);
  add("fekete", "subadditive limit along a ray", cmd_fekete);
  add("golden", "run golden checks (all built-ins by default)", cmd_golden);
  CLI::App* props = add("properties", "randomized property suites", cmd_properties);
  props->add_option("--cases", o.cases, "cases per suite");
  props->add_option("--suite", o.suite, "run a single suite");

  try {
    app.parse(argc, argv);
    return selected(o);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const GoldenMismatch& e) {
    std::cerr << "golden mismatch: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
