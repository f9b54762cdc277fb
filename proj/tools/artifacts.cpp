#include "artifacts.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace okb::io {

ordered_json to_json(const Rational& r) { return r.str(); }

ordered_json to_json(const Point& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p) out.push_back(c.str());
  return out;
}

ordered_json to_json(const std::vector<Point>& pts) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

ordered_json to_json(const Polytope& p) {
  return {{"dim", p.dim()}, {"affine_dim", p.affine_dim()}, {"vertices", to_json(p.vertices())}, {"volume", to_json(p.volume())}};
}

ordered_json to_json(const ConcavePL& f) {
  ordered_json facets = ordered_json::array();
  for (const auto& piece : f.pieces())
    facets.push_back({{"gradient", to_json(piece.gradient)}, {"constant", to_json(piece.constant)}, {"cell", to_json(piece.cell)}});
  return {{"domain", to_json(f.domain())}, {"facets", facets}};
}

ordered_json to_json(const Enclosure& e) {
  if (e.exact()) return {{"value", to_json(e.lo)}};
  return {{"lo", to_json(e.lo)}, {"hi", to_json(e.hi)}};
}

ordered_json to_json(const FeketeResult& f) {
  ordered_json ratios = ordered_json::array();
  for (const auto& [k, r] : f.ratios) ratios.push_back({{"k", k}, {"ratio", to_json(r)}});
  return {{"certified", to_json(f.certified)},
          {"estimate", to_json(f.estimate)},
          {"max_level", f.max_level},
          {"non_linear", f.non_linear},
          {"ratios", ratios}};
}

ordered_json to_json(const JumpingProfile& j) {
  return {{"jumps", j.jumps}, {"dims", j.dims}, {"mass", to_json(j.mass)}, {"e_max", j.e_max()}, {"e_min", j.e_min()}};
}

ordered_json to_json(const IntegralReport& r) {
  ordered_json mass = ordered_json::array();
  for (const auto& [k, m] : r.mass_sequence) mass.push_back({{"k", k}, {"normalized_mass", to_json(m)}});
  return {{"integral", to_json(r.integral)},
          {"normalized", to_json(r.normalized)},
          {"body_volume", to_json(r.body_volume)},
          {"max_level", r.max_level},
          {"mass_sequence", mass}};
}

ordered_json to_json(const WitnessReport& w) {
  ordered_json probes = ordered_json::array();
  for (const auto& p : w.probes)
    probes.push_back({{"point", to_json(p.point)}, {"distance2", to_json(p.distance2)}, {"value", to_json(p.value)}});
  return {{"locally_cone", w.locally_cone},
          {"value_at_center", to_json(w.value_at_center)},
          {"discontinuity_certified", w.discontinuity_certified},
          {"continuity_certified", w.continuity_certified},
          {"probes", probes}};
}

ordered_json to_json(const IdentityReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    if (c.skipped) {
      checks.push_back({{"x", to_json(c.x)}, {"skipped", true}});
      continue;
    }
    checks.push_back({{"x", to_json(c.x)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"residual", to_json(c.residual())}});
  }
  return {{"holds", r.holds()}, {"evaluated", r.evaluated()}, {"checks", checks}};
}

ordered_json to_json(const LatticePoint& x) { return ordered_json(x); }

std::string scan_csv(const std::vector<ScanEntry>& scan) {
  std::ostringstream out;
  out << "lambda,flagged,reason,closed_form,truncated,normalized,mass_tail\n";
  for (const auto& e : scan) {
    out << e.lambda.str() << ',' << (e.flagged ? "true" : "false") << ',' << e.reason << ','
        << (e.closed_form ? e.closed_form->str() : "") << ',';
    if (e.truncated) {
      out << e.truncated->integral.str() << ',' << e.truncated->normalized.str() << ',';
      if (!e.truncated->mass_sequence.empty()) out << e.truncated->mass_sequence.back().second.str();
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

constexpr double kSize = 420;
constexpr double kMargin = 30;

/// World-to-pixel map for a bounding box.
class Canvas {
 public:
  Canvas(double x0, double y0, double x1, double y1) : x0_(x0), y0_(y0) {
    const double span = std::max({x1 - x0, y1 - y0, 1e-9});
    scale_ = (kSize - 2 * kMargin) / span;
  }

  double x(double v) const { return kMargin + (v - x0_) * scale_; }
  double y(double v) const { return kSize - kMargin - (v - y0_) * scale_; }
  double scale() const { return scale_; }

 private:
  double x0_;
  double y0_;
  double scale_;
};

std::string header() {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
      << kSize << ' ' << kSize << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

double coord(const Point& p, size_t i) { return i < p.size() ? p[i].to_double() : 0.0; }

Canvas canvas_for(const std::vector<Point>& pts) {
  double x0 = std::numeric_limits<double>::max(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const auto& p : pts) {
    x0 = std::min(x0, coord(p, 0));
    x1 = std::max(x1, coord(p, 0));
    y0 = std::min(y0, coord(p, 1));
    y1 = std::max(y1, coord(p, 1));
  }
  return Canvas(x0, y0, x1, y1);
}

std::string polygon(const Canvas& c, const std::vector<Point>& ring, const std::string& style) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  if (ring.size() <= 2) {
    const Point& a = ring.front();
    const Point& b = ring.back();
    out << "<line x1=\"" << c.x(coord(a, 0)) << "\" y1=\"" << c.y(coord(a, 1)) << "\" x2=\"" << c.x(coord(b, 0))
        << "\" y2=\"" << c.y(coord(b, 1)) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    return out.str();
  }
  out << "<polygon points=\"";
  for (const auto& p : ring) out << c.x(coord(p, 0)) << ',' << c.y(coord(p, 1)) << ' ';
  out << "\" " << style << "/>\n";
  return out.str();
}

const std::vector<Point>& ring_of(const Polytope& p) { return p.affine_dim() == 2 ? p.cycle() : p.vertices(); }

std::string dot(const Canvas& c, const Point& p, const std::string& color, double r = 3.5) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << "<circle cx=\"" << c.x(coord(p, 0)) << "\" cy=\"" << c.y(coord(p, 1))
      << "\" r=\"" << r << "\" fill=\"" << color << "\"/>\n";
  return out.str();
}

}  // namespace

std::string polytope_svg(const Polytope& body, const std::vector<Point>& marks) {
  std::vector<Point> all = body.vertices();
  all.insert(all.end(), marks.begin(), marks.end());
  const Canvas c = canvas_for(all);
  std::string out = header();
  out += polygon(c, ring_of(body), "fill=\"#cfe3f7\" stroke=\"black\" stroke-width=\"1.5\"");
  for (const auto& m : marks) out += dot(c, m, "#444", 2.5);
  for (const auto& v : body.vertices()) out += dot(c, v, "black");
  return out + "</svg>\n";
}

std::string function_svg(const ConcavePL& f) {
  std::string out = header();
  if (f.domain().dim() == 1) {
    std::vector<Point> graph;
    for (const auto& v : f.domain().vertices()) graph.push_back({v[0], f(v)});
    for (const auto& piece : f.pieces())
      for (const auto& v : piece.cell.vertices()) graph.push_back({v[0], f(v)});
    std::sort(graph.begin(), graph.end());
    graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
    std::vector<Point> frame = graph;
    for (const auto& v : f.domain().vertices()) frame.push_back({v[0], Rational(0)});
    const Canvas c = canvas_for(frame);
    std::ostringstream line;
    line << std::fixed << std::setprecision(2) << "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"";
    for (const auto& g : graph) line << c.x(coord(g, 0)) << ',' << c.y(coord(g, 1)) << ' ';
    line << "\"/>\n";
    out += line.str();
    for (const auto& g : graph) out += dot(c, g, "black");
    return out + "</svg>\n";
  }
  const Canvas c = canvas_for(f.domain().vertices());
  Rational top(0);
  for (const auto& v : f.domain().vertices()) top = max(top, f(v));
  for (const auto& piece : f.pieces())
    for (const auto& v : piece.cell.vertices()) top = max(top, f(v));
  for (const auto& piece : f.pieces()) {
    const Point mid = piece.cell.vertex_centroid();
    const double shade = top.is_zero() ? 0.0 : (f(mid) / top).to_double();
    const int level = static_cast<int>(235 - 150 * shade);
    std::ostringstream style;
    style << "fill=\"rgb(" << level << ',' << level << ",255)\" stroke=\"black\" stroke-width=\"1\"";
    out += polygon(c, ring_of(piece.cell), style.str());
    std::ostringstream label;
    label << std::fixed << std::setprecision(2) << "<text x=\"" << c.x(coord(mid, 0)) << "\" y=\"" << c.y(coord(mid, 1))
          << "\" font-size=\"11\" text-anchor=\"middle\">" << to_string(piece.gradient) << " x + " << piece.constant.str()
          << "</text>\n";
    out += label.str();
  }
  return out + "</svg>\n";
}

std::string witness_svg(const Body& body, const Point& center, const WitnessReport& w) {
  std::string out = header();
  if (const auto* poly = std::get_if<Polytope>(&body)) {
    std::vector<Point> all = poly->vertices();
    all.push_back(center);
    const Canvas c = canvas_for(all);
    out += polygon(c, ring_of(*poly), "fill=\"#e6e6e6\" stroke=\"black\"");
    for (const auto& p : w.probes) out += dot(c, p.point, p.value.exact() && p.value.lo.is_zero() ? "#c0392b" : "#1f5fa8");
    out += dot(c, center, "black", 5);
    return out + "</svg>\n";
  }
  const long grid = 80;
  const Rational half_span(6, 5);
  const Rational step = Rational(2) * half_span / Rational(grid);
  const Rational rx0 = center[0] - half_span;
  const Rational ry0 = center[1] - half_span;
  const double x0 = rx0.to_double();
  const double y0 = ry0.to_double();
  const double span = (Rational(2) * half_span).to_double();
  const Canvas c(x0, y0, x0 + span, y0 + span);
  const double cell = step.to_double();
  std::ostringstream fill;
  fill << std::fixed << std::setprecision(2);
  for (long i = 0; i < grid; ++i)
    for (long j = 0; j < grid; ++j) {
      const Point p = {rx0 + (Rational(i) + Rational(1, 2)) * step, ry0 + (Rational(j) + Rational(1, 2)) * step};
      if (!body_contains(body, p)) continue;
      fill << "<rect x=\"" << c.x(x0 + static_cast<double>(i) * cell) << "\" y=\"" << c.y(y0 + static_cast<double>(j + 1) * cell)
           << "\" width=\"" << cell * c.scale() + 0.5 << "\" height=\"" << cell * c.scale() + 0.5 << "\" fill=\"#e6e6e6\"/>\n";
    }
  out += fill.str();
  for (const auto& p : w.probes) out += dot(c, p.point, p.value.exact() && p.value.lo.is_zero() ? "#c0392b" : "#1f5fa8", 2.5);
  out += dot(c, center, "black", 5);
  return out + "</svg>\n";
}

}  // namespace okb::io
