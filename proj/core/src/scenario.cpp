#include "okb/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "okb/boundary.hpp"
#include "okb/filtration.hpp"
#include "okb/golden.hpp"
#include "okb/integrals.hpp"
#include "okb/okounkov_body.hpp"
#include "okb/okounkov_function.hpp"

namespace okb {

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Series: return "series";
    case ScenarioKind::FamilyScan: return "family-scan";
    case ScenarioKind::Boundary: return "boundary";
    case ScenarioKind::Semigroup: return "semigroup";
    case ScenarioKind::Fekete: return "fekete";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  size_t a = 0;
  size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    const std::string part = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!part.empty()) out.push_back(part);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Point pt(std::initializer_list<Rational> c) { return make_point(c); }

Polytope unit_square() { return Polytope::hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}, 2); }

Scenario series(std::string name, std::string description, SeriesFamily family, ValuationSpec val, long k) {
  Scenario s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.family = std::move(family);
  s.valuation = std::move(val);
  s.max_level = k;
  return s;
}

long parse_long(const std::string& key, const std::string& text) {
  try {
    size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': expected an integer, got '" + text + "'");
  }
}

LatticePoint parse_lattice_point(std::string_view text) {
  LatticePoint out;
  for (const auto& c : parse_point(text)) {
    if (!c.is_integer()) throw std::invalid_argument("lattice point coordinates must be integers: " + std::string(text));
    out.push_back(c.num().get_si());
  }
  return out;
}

ValuationSpec parse_valuation(const std::string& text, size_t nvars) {
  const auto space = text.find(' ');
  const std::string kind = trim(text.substr(0, space));
  const std::string arg = space == std::string::npos ? "" : trim(text.substr(space + 1));
  if (kind == "point") return ValuationSpec::at_point(parse_point(arg));
  if (kind == "curve") return ValuationSpec::along_curve(Polynomial::parse(arg, nvars));
  if (kind == "exceptional") {
    const long i = parse_long("valuation", arg);
    if (i < 1) throw std::invalid_argument("exceptional divisors are numbered from 1");
    return ValuationSpec::along_exceptional(static_cast<size_t>(i - 1));
  }
  throw std::invalid_argument("valuation must be 'point <p>', 'curve <form>' or 'exceptional <i>'");
}

Body parse_body(const std::string& text) {
  if (text == "disk-demo") return QuadraticCapBody::disk_demo();
  if (text == "square") return unit_square();
  const auto space = text.find(' ');
  const std::string kind = text.substr(0, space);
  const std::string arg = space == std::string::npos ? "" : trim(text.substr(space + 1));
  if (kind == "polytope") {
    const auto pts = parse_point_list(arg);
    if (pts.empty()) throw std::invalid_argument("polytope body needs points");
    return Polytope::hull(pts, pts.front().size());
  }
  if (kind == "disk") {
    const auto parts = split(arg, ';');
    if (parts.size() != 2) throw std::invalid_argument("disk body: 'disk cx,cy; r2'");
    return QuadraticCapBody::disk(parse_point(parts[0]), Rational::parse(parts[1]));
  }
  throw std::invalid_argument("body must be disk-demo, square, 'polytope <points>' or 'disk <center>; <r2>'");
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

Point parse_point(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ':', ',');
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == '[' || c == ']'; }), s.end());
  const auto out = parse_rational_list(s);
  if (out.empty()) throw std::invalid_argument("empty point '" + std::string(text) + "'");
  return out;
}

std::vector<Point> parse_point_list(std::string_view text) {
  std::vector<Point> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_point(part));
  return out;
}

std::vector<std::string> builtin_scenario_names() {
  return {"p1-curve",          "p1-curve-q",      "p2-deg2",     "p2-ordP0",       "p2-ordP1",
          "blowup1",           "blowup1-function", "blowup1-family", "blowup2-generic", "blowup2-collinear",
          "disk-demo",         "square-demo",     "semigroup-gap", "fekete-demo"};
}

Scenario builtin_scenario(const std::string& name, std::optional<Rational> lambda) {
  const GeometrySpec p2 = GeometrySpec::p2();
  const Point p0 = p2.flag_point();
  const Point p1 = GeometrySpec::default_p1();
  const Point p2g = GeometrySpec::generic_p2();

  if (name == "p1-curve" || name == "p1-curve-q") {
    const bool at_p = name == "p1-curve";
    const GeometrySpec g = GeometrySpec::p1();
    Scenario s = series(name, at_p ? "O(1) on P1, order at the flag point p" : "O(1) on P1, order at q = [1:1]",
                        SeriesFamily(g, {1, {}}), ValuationSpec::at_point(at_p ? g.flag_point() : pt({1, 1})), 6);
    s.expected_body = std::vector<Point>{pt({0}), pt({1})};
    s.expected_function = at_p ? golden::curve_order_at_flag_point(1) : golden::curve_order_elsewhere(1);
    s.expected_integral = Rational(1, 2);
    s.expected_jumps = std::vector<long>{1, 0};
    return s;
  }
  if (name == "p2-deg2") {
    Scenario s = series(name, "O(2) on P2, order at P0", SeriesFamily(p2, {2, {}}), ValuationSpec::at_point(p0), 2);
    s.expected_body = std::vector<Point>{pt({0, 0}), pt({0, 2}), pt({2, 0})};
    s.expected_jumps = std::vector<long>{2, 2, 2, 1, 1, 0};
    return s;
  }
  if (name == "p2-ordP0" || name == "p2-ordP1") {
    const bool at_p0 = name == "p2-ordP0";
    Scenario s = series(name, at_p0 ? "O(1) on P2, order at the flag point P0" : "O(1) on P2, order at P1 = [1:0:0]",
                        SeriesFamily(p2, {1, {}}), ValuationSpec::at_point(at_p0 ? p0 : p1), 3);
    s.expected_body = std::vector<Point>{pt({0, 0}), pt({0, 1}), pt({1, 0})};
    s.expected_function = at_p0 ? golden::p2_order_at_flag_point() : golden::p2_order_off_line();
    s.expected_integral = Rational(1, 3);
    s.expected_jumps = std::vector<long>{1, 1, 0};
    return s;
  }
  if (name == "blowup1") {
    const Rational l = lambda.value_or(Rational(1));
    Scenario s = series(name, "2H - lambda E1 on the blow-up at P1, order at P2 = [1:1:1]",
                        SeriesFamily(GeometrySpec::blowup({p1}), {2, {l}}), ValuationSpec::at_point(p2g), 4);
    if (l == Rational(1)) s.expected_body = std::vector<Point>{pt({0, 0}), pt({0, 2}), pt({1, 0}), pt({1, 1})};
    return s;
  }
  if (name == "blowup1-function") {
    const Rational l = lambda.value_or(Rational(1, 2));
    Scenario s = series(name, "H - lambda E1, order at P2 = [1:1:1] off the line P0 P1",
                        SeriesFamily(GeometrySpec::blowup({p1}), {1, {l}}), ValuationSpec::at_point(p2g), 8);
    s.expected_body = golden::blowup_body(l).vertices();
    s.expected_function = golden::blowup_order_off_lines(l);
    s.expected_integral = golden::blowup_integral(l);
    return s;
  }
  if (name == "blowup1-family") {
    Scenario s;
    s.name = name;
    s.description = "H - lambda E1, order at P2 = [1:1:1], across lambda";
    s.kind = ScenarioKind::FamilyScan;
    s.max_level = 8;
    s.lambda_grid = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    return s;
  }
  if (name == "blowup2-generic" || name == "blowup2-collinear") {
    const bool generic = name == "blowup2-generic";
    Scenario s = series(name,
                        generic ? "2H - E1 - E2, P2 = [1:1:1] in general position"
                                : "2H - E1 - E2, P2 = [1:0:1] on the line through P0 and P1",
                        SeriesFamily(GeometrySpec::blowup({p1, generic ? p2g : GeometrySpec::collinear_p2()}),
                                     {2, {1, 1}}),
                        ValuationSpec::at_point(p0), 6);
    s.expected_body = generic ? std::vector<Point>{pt({0, 0}), pt({0, 2}), pt({1, 0})}
                              : std::vector<Point>{pt({0, 0}), pt({0, 2}), pt({1, 1})};
    return s;
  }
  if (name == "disk-demo" || name == "square-demo") {
    const bool disk = name == "disk-demo";
    Scenario s;
    s.name = name;
    s.kind = ScenarioKind::Boundary;
    s.description = disk ? "{0 <= a <= 1, b >= 0, (1-b)^2 + a^2 <= 1} at the arc point (1,1)" : "unit square at (0,0)";
    s.body = disk ? Body(QuadraticCapBody::disk_demo()) : Body(unit_square());
    s.center = disk ? pt({1, 1}) : pt({0, 0});
    s.expected_discontinuity = disk;
    return s;
  }
  if (name == "semigroup-gap") {
    Scenario s;
    s.name = name;
    s.kind = ScenarioKind::Semigroup;
    s.description = "<3, 5> in N";
    s.generators = {{3}, {5}};
    s.box = {20};
    s.expected_gaps = std::vector<LatticePoint>{{1}, {2}, {4}, {7}};
    return s;
  }
  if (name == "fekete-demo") {
    Scenario s;
    s.name = name;
    s.kind = ScenarioKind::Fekete;
    s.description = "ceil of the Euclidean norm on N^2 along (3,4)";
    s.generators = {{1, 0}, {0, 1}};
    s.box = {8, 8};
    s.function = "ceil-norm";
    s.target = pt({3, 4});
    s.steps = 32;
    s.expected_limit = Rational(5);
    return s;
  }
  std::string known;
  for (const auto& n : builtin_scenario_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown scenario '" + name + "' (built-ins: " + known + ")");
}

ConfigMap parse_config(std::string_view text) {
  ConfigMap out;
  std::string section = "scenario";
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw std::invalid_argument("config line " + std::to_string(lineno) + ": unterminated section");
      section = trim(std::string_view(t).substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    out[section][trim(std::string_view(t).substr(0, eq))] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

Scenario scenario_from_config(std::string_view text) {
  const ConfigMap cfg = parse_config(text);
  std::map<std::string, std::string> sc;
  if (auto it = cfg.find("scenario"); it != cfg.end()) sc = it->second;
  const auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = sc.find(key);
    if (it == sc.end()) return std::nullopt;
    return it->second;
  };

  Scenario s;
  if (auto base = get("base")) {
    std::optional<Rational> lambda;
    if (auto l = get("lambda")) lambda = Rational::parse(*l);
    s = builtin_scenario(*base, lambda);
  }
  if (auto v = get("name")) s.name = *v;
  if (s.name.empty()) s.name = "custom";
  if (auto v = get("kind")) {
    if (*v == "series") s.kind = ScenarioKind::Series;
    else if (*v == "family-scan") s.kind = ScenarioKind::FamilyScan;
    else if (*v == "boundary") s.kind = ScenarioKind::Boundary;
    else if (*v == "semigroup") s.kind = ScenarioKind::Semigroup;
    else if (*v == "fekete") s.kind = ScenarioKind::Fekete;
    else throw std::invalid_argument("unknown kind '" + *v + "'");
  }

  const bool geometry_keys = get("model") || get("degree") || get("points") || get("multiplicities") || get("flag");
  if (geometry_keys) {
    const std::string model = get("model").value_or(s.family ? "" : "p2");
    GeometrySpec g = s.family ? s.family->geometry() : GeometrySpec::p2();
    Flag flag = g.flag();
    if (auto f = get("flag")) {
      const auto idx = parse_lattice_point(*f);
      if (idx.size() == 1) flag = Flag{0, static_cast<size_t>(idx[0])};
      else if (idx.size() == 2) flag = Flag{static_cast<size_t>(idx[0]), static_cast<size_t>(idx[1])};
      else throw std::invalid_argument("flag = <line var>, <point var>");
    }
    std::vector<Point> points = g.blown_up_points();
    if (auto p = get("points")) points = parse_point_list(*p);
    if (model == "p1") g = GeometrySpec::p1();
    else if (model == "p2") g = GeometrySpec::p2(flag);
    else if (model == "blowup") g = GeometrySpec::blowup(points, flag);
    else if (!model.empty()) throw std::invalid_argument("model must be p1, p2 or blowup");
    else if (g.model() == Model::BlowupP2) g = GeometrySpec::blowup(points, flag);
    else if (g.model() == Model::P2) g = GeometrySpec::p2(flag);
    DivisorClass d = s.family ? s.family->divisor() : DivisorClass{1, {}};
    if (auto v = get("degree")) d.degree = Rational::parse(*v);
    if (auto v = get("multiplicities")) d.multiplicities = parse_rational_list(*v);
    if (d.multiplicities.size() != g.blown_up_points().size()) d.multiplicities.resize(g.blown_up_points().size());
    s.family = SeriesFamily(g, d);
  }
  if (auto v = get("valuation")) {
    const size_t nvars = s.family ? s.family->geometry().nvars() : 3;
    s.valuation = parse_valuation(*v, nvars);
  }
  if (auto v = get("max_level")) s.max_level = parse_long("max_level", *v);
  if (auto v = get("t_denominator_bound")) s.t_denominator_bound = parse_long("t_denominator_bound", *v);
  if (auto v = get("lambda_grid")) s.lambda_grid = parse_rational_list(*v);
  if (auto v = get("body")) s.body = parse_body(*v);
  if (auto v = get("center")) s.center = parse_point(*v);
  if (auto v = get("probes")) s.probes = static_cast<size_t>(parse_long("probes", *v));
  if (auto v = get("generators")) {
    s.generators.clear();
    for (const auto& part : split(*v, ';')) s.generators.push_back(parse_lattice_point(part));
  }
  if (auto v = get("box")) s.box = parse_lattice_point(*v);
  if (auto v = get("function")) s.function = *v;
  if (auto v = get("params")) s.function_params = parse_rational_list(*v);
  if (auto v = get("target")) s.target = parse_point(*v);
  if (auto v = get("steps")) s.steps = parse_long("steps", *v);

  if (auto it = cfg.find("expected"); it != cfg.end()) {
    for (const auto& [key, value] : it->second) {
      if (key == "body") s.expected_body = parse_point_list(value);
      else if (key == "integral") s.expected_integral = Rational::parse(value);
      else if (key == "jumps") {
        std::vector<long> jumps;
        for (const auto& j : parse_lattice_point(value)) jumps.push_back(j);
        s.expected_jumps = jumps;
      } else if (key == "discontinuity") s.expected_discontinuity = value == "true";
      else if (key == "gaps") {
        std::vector<LatticePoint> gaps;
        for (const auto& part : split(value, ';')) gaps.push_back(parse_lattice_point(part));
        s.expected_gaps = gaps;
      } else if (key == "limit") s.expected_limit = Rational::parse(value);
      else throw std::invalid_argument("unknown expected key '" + key + "'");
    }
  }

  if ((s.kind == ScenarioKind::Series) && (!s.family || !s.valuation))
    throw std::invalid_argument("series scenarios need a model, divisor and valuation");
  if (s.kind == ScenarioKind::Boundary && !s.body) throw std::invalid_argument("boundary scenarios need a body");
  if ((s.kind == ScenarioKind::Semigroup || s.kind == ScenarioKind::Fekete) && s.generators.empty())
    throw std::invalid_argument("semigroup scenarios need generators");
  return s;
}

namespace {

std::string points_str(const std::vector<Point>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : " ") + to_string(p);
  return out;
}

}  // namespace

std::vector<GoldenCheck> golden_checks(const Scenario& s) {
  std::vector<GoldenCheck> out;
  switch (s.kind) {
    case ScenarioKind::Series: {
      if (s.expected_body) {
        OkounkovBodyApprox b = okounkov_body(*s.family, s.max_level);
        const bool ok = b.certify(*s.expected_body);
        out.push_back({"body", ok, "K=" + std::to_string(s.max_level) + " vertices " + points_str(b.body.vertices())});
      }
      if (s.expected_function || s.expected_integral) {
        const FunctionApprox f = okounkov_function_envelope(*s.family, *s.valuation, s.max_level);
        if (s.expected_function) {
          bool ok = golden::same_function(f.function, *s.expected_function);
          for (const auto& sample : f.samples) ok = ok && (*s.expected_function)(sample.v) >= sample.value;
          out.push_back({"function", ok, std::to_string(f.function.pieces().size()) + " affine pieces"});
        }
        if (s.expected_integral) {
          const Rational v = integrate(f.function);
          out.push_back({"integral", v == *s.expected_integral, "integral " + v.str()});
        }
      }
      if (s.expected_jumps) {
        const JumpingProfile jp = jumping_numbers(s.family->level(s.family->step()), *s.valuation);
        std::string detail;
        for (long e : jp.jumps) detail += (detail.empty() ? "" : ",") + std::to_string(e);
        out.push_back({"jumps", jp.jumps == *s.expected_jumps, "(" + detail + ") mass " + jp.mass.str()});
      }
      break;
    }
    case ScenarioKind::FamilyScan: {
      const auto scan = family_scan(golden::blowup_family(), s.lambda_grid, s.max_level);
      for (const auto& e : scan) {
        if (e.flagged) {
          out.push_back({"lambda=" + e.lambda.str(), true, "flagged: " + e.reason});
          continue;
        }
        const Rational expected = golden::blowup_integral(e.lambda);
        bool ok = e.closed_form && *e.closed_form == expected;
        std::string detail = "closed form " + (e.closed_form ? e.closed_form->str() : std::string("-"));
        if (e.truncated) {
          ok = ok && (e.truncated->integral - expected).abs() <= Rational(1, s.max_level);
          detail += ", level-" + std::to_string(s.max_level) + " envelope " + e.truncated->integral.str();
        }
        out.push_back({"lambda=" + e.lambda.str(), ok, detail});
      }
      break;
    }
    case ScenarioKind::Boundary: {
      if (!s.expected_discontinuity) break;
      const WitnessReport w = discontinuity_witness(*s.body, s.center, s.probes);
      const bool ok = *s.expected_discontinuity ? w.discontinuity_certified : w.continuity_certified;
      out.push_back({*s.expected_discontinuity ? "discontinuity" : "continuity", ok,
                     std::to_string(w.probes.size()) + " probes, locally cone: " + (w.locally_cone ? "yes" : "no")});
      break;
    }
    case ScenarioKind::Semigroup: {
      if (!s.expected_gaps) break;
      const GapReport g = gordan_gap(DiscreteSemigroup(s.generators), s.box);
      std::string detail;
      for (const auto& x : g.gaps) detail += (detail.empty() ? "" : " ") + to_string(to_point(x));
      out.push_back({"gaps", g.gaps == *s.expected_gaps, "{" + detail + "}"});
      break;
    }
    case ScenarioKind::Fekete: {
      if (!s.expected_limit) break;
      const DiscreteSemigroup sg(s.generators);
      const HatfEstimate h =
          hatf_estimate(sg, builtin_function(s.function, s.function_params), s.target, ray_schedule(s.target, s.steps));
      const bool ok = h.lo <= *s.expected_limit && *s.expected_limit <= h.hi && h.width() <= Rational(1, s.steps);
      out.push_back({"hatf", ok, "bracket [" + h.lo.str() + ", " + h.hi.str() + "]"});
      break;
    }
  }
  return out;
}

}  // namespace okb
