#include "okb/boundary.hpp"

#include <optional>
#include <stdexcept>

namespace okb {

HomothetyFunction::HomothetyFunction(Body body, Point center, unsigned precision_bits)
    : body_(std::move(body)), center_(std::move(center)), bits_(precision_bits) {
  if (!body_on_boundary(body_, center_)) throw std::invalid_argument("center " + to_string(center_) + " is not a boundary point");
}

namespace {

Rational dist2(const Point& a, const Point& b) {
  const Point d = a - b;
  return dot(d, d);
}

Rational dyadic(size_t i) { return Rational(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(i)); }

// Second intersection of the conic {q = 0} with the line p + r d (q(p) = 0).
Point chord_end(const QuadraticCapBody& cap, const Point& p, const Point& d) {
  const auto& q = cap.quadratic();
  const Point qd = make_point({q[0][0] * d[0] + q[0][1] * d[1], q[1][0] * d[0] + q[1][1] * d[1]});
  const Rational dqd = dot(d, qd);
  const Rational lin = Rational(2) * dot(p, qd) + dot(cap.linear_part(), d);
  return p + (-lin / dqd) * d;
}

std::optional<std::vector<Point>> arc_probes(const QuadraticCapBody& cap, const Point& p, size_t n) {
  const auto& q = cap.quadratic();
  const Point g = make_point({Rational(2) * (q[0][0] * p[0] + q[0][1] * p[1]) + cap.linear_part()[0],
                              Rational(2) * (q[1][0] * p[0] + q[1][1] * p[1]) + cap.linear_part()[1]});
  for (int sign : {1, -1}) {
    const Point tangent = make_point({-g[1] * Rational(sign), g[0] * Rational(sign)});
    for (size_t start = 1; start <= 30; ++start) {
      std::vector<Point> probes;
      for (size_t i = start; i < start + n; ++i) {
        const Point x = chord_end(cap, p, tangent + dyadic(i) * g);
        if (!cap.contains(x) || !cap.on_curved_arc(x)) break;
        probes.push_back(x);
      }
      if (probes.size() == n) return probes;
    }
  }
  return std::nullopt;
}

std::vector<Halfspace> linear_constraints(const Body& body) {
  if (const auto* poly = std::get_if<Polytope>(&body)) return poly->facets();
  return std::get<QuadraticCapBody>(body).linear();
}

// A vector v with p + s v on the boundary for all s in (0, 1].
std::optional<Point> boundary_direction(const Body& body, const Point& p) {
  if (const auto* poly = std::get_if<Polytope>(&body); poly != nullptr && poly->dim() == 1) {
    for (const auto& w : poly->vertices())
      if (w != p) return w - p;
    return std::nullopt;
  }
  for (const auto& f : linear_constraints(body)) {
    if (!f.slack(p).is_zero() || f.normal.size() != 2) continue;
    for (int sign : {1, -1}) {
      const Point tangent = make_point({-f.normal[1] * Rational(sign), f.normal[0] * Rational(sign)});
      for (size_t j = 0; j <= 40; ++j) {
        const Point x = p + dyadic(j) * tangent;
        if (body_contains(body, x) && f.slack(x).is_zero()) return dyadic(j) * tangent;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

WitnessReport discontinuity_witness(const Body& body, const Point& p, size_t n_probes) {
  if (n_probes == 0) throw std::invalid_argument("at least one probe is needed");
  WitnessReport out;
  out.locally_cone = is_locally_cone(body, p);
  const HomothetyFunction phi(body, p);
  out.value_at_center = phi(p);

  if (!out.locally_cone) {
    const auto& cap = std::get<QuadraticCapBody>(body);
    const auto probes = arc_probes(cap, p, n_probes);
    if (!probes) throw std::runtime_error("no rational arc probes found near " + to_string(p));
    for (const auto& x : *probes) out.probes.push_back({x, dist2(x, p), phi(x)});
    bool ok = out.value_at_center.exact() && out.value_at_center.lo == Rational(1);
    for (size_t i = 0; i < out.probes.size(); ++i) {
      const Probe& pr = out.probes[i];
      ok = ok && pr.value.exact() && pr.value.lo.is_zero() && pr.distance2.sign() > 0;
      if (i > 0) ok = ok && pr.distance2 < out.probes[i - 1].distance2;
    }
    out.discontinuity_certified = ok;
    return out;
  }

  const auto dir = boundary_direction(body, p);
  if (!dir) throw std::runtime_error("no boundary direction found at " + to_string(p));
  bool ok = out.value_at_center.exact() && out.value_at_center.lo == Rational(1);
  std::optional<Rational> ratio;
  for (size_t i = 1; i <= n_probes; ++i) {
    const Rational s = dyadic(i);
    const Point x = p + s * *dir;
    Probe pr{x, dist2(x, p), phi(x)};
    if (!pr.value.exact()) {
      ok = false;
    } else {
      const Rational r = (Rational(1) - pr.value.lo) / s;
      if (ratio && *ratio != r) ok = false;
      ratio = r;
    }
    out.probes.push_back(std::move(pr));
  }
  out.continuity_certified = ok;
  return out;
}

}  // namespace okb
