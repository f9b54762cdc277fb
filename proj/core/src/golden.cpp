#include "okb/golden.hpp"

#include <stdexcept>

namespace okb::golden {

namespace {

Point pt(const Rational& a, const Rational& b) { return make_point({a, b}); }

template <typename F>
ConcavePL from_vertices(const Polytope& domain, const std::vector<Point>& extra, F f) {
  std::vector<Sample> samples;
  for (const auto& v : domain.vertices()) samples.push_back({v, f(v)});
  for (const auto& v : extra) samples.push_back({v, f(v)});
  return concave_envelope(std::move(samples), domain);
}

}  // namespace

Polytope unit_triangle() { return Polytope::hull({pt(0, 0), pt(1, 0), pt(0, 1)}, 2); }

Polytope blowup_body(const Rational& lambda) {
  if (lambda.sign() < 0 || lambda >= Rational(1)) throw std::invalid_argument("lambda must lie in [0, 1)");
  const Rational w = Rational(1) - lambda;
  return Polytope::hull({pt(0, 0), pt(w, 0), pt(w, lambda), pt(0, 1)}, 2);
}

ConcavePL p2_order_at_flag_point() {
  return from_vertices(unit_triangle(), {}, [](const Point& x) { return x[0] + x[1]; });
}

ConcavePL p2_order_off_line() {
  return from_vertices(unit_triangle(), {}, [](const Point& x) { return Rational(1) - x[0]; });
}

ConcavePL blowup_order_at_flag_point(const Rational& lambda) {
  return from_vertices(blowup_body(lambda), {}, [](const Point& x) { return x[0] + x[1]; });
}

ConcavePL blowup_order_off_lines(const Rational& lambda) {
  const Rational w = Rational(1) - lambda;
  const auto f = [&](const Point& x) {
    const Rational s = x[0] + x[1];
    return s <= w ? Rational(1) - x[0] : Rational(2) - Rational(2) * x[0] - x[1] - lambda;
  };
  return from_vertices(blowup_body(lambda), {pt(0, w)}, f);
}

ConcavePL curve_order_at_flag_point(const Rational& degree) {
  const Polytope seg = Polytope::hull({make_point({0}), make_point({degree})}, 1);
  return from_vertices(seg, {}, [](const Point& x) { return x[0]; });
}

ConcavePL curve_order_elsewhere(const Rational& degree) {
  const Polytope seg = Polytope::hull({make_point({0}), make_point({degree})}, 1);
  return from_vertices(seg, {}, [&](const Point& x) { return degree - x[0]; });
}

Rational blowup_integral(const Rational& lambda) {
  return Rational(1, 3) - pow(lambda, 2) / Rational(2) + pow(lambda, 3) / Rational(6);
}

FamilySpec blowup_family() {
  FamilySpec spec;
  spec.member = [](const Rational& lambda) {
    return FamilyMember{SeriesFamily(GeometrySpec::blowup({GeometrySpec::default_p1()}), DivisorClass{1, {lambda}}),
                        ValuationSpec::at_point(GeometrySpec::generic_p2())};
  };
  spec.closed_form = [](const Rational& lambda) -> std::optional<ConcavePL> {
    if (lambda.sign() < 0 || lambda >= Rational(1)) return std::nullopt;
    return blowup_order_off_lines(lambda);
  };
  return spec;
}

bool same_function(const ConcavePL& a, const ConcavePL& b) {
  if (!(a.domain() == b.domain()) || a.pieces().size() != b.pieces().size()) return false;
  for (size_t i = 0; i < a.pieces().size(); ++i) {
    if (a.pieces()[i].gradient != b.pieces()[i].gradient || a.pieces()[i].constant != b.pieces()[i].constant) return false;
  }
  for (const auto& v : a.domain().vertices())
    if (a(v) != b(v)) return false;
  return true;
}

}  // namespace okb::golden
