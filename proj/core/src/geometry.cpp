#include "okb/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "okb/matrix.hpp"

namespace okb {

namespace {

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Point& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Point pick(const Point& p, const std::vector<size_t>& coords) {
  Point out;
  out.reserve(coords.size());
  for (size_t c : coords) out.push_back(p[c]);
  return out;
}

/// Coordinates on which the projection is injective over the affine hull.
std::vector<size_t> affine_chart(const std::vector<Point>& pts, size_t dim) {
  std::vector<std::vector<Rational>> dirs;
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - pts[0]);
  return pivot_columns(Matrix(std::move(dirs), dim));
}

/// Scales a plane (normal, offset) so that the normal is a primitive integer
/// vector; the orientation is preserved.
std::pair<Point, Rational> normalize_plane(const Point& normal, const Rational& offset) {
  Point prim = primitive(normal);
  size_t k = 0;
  while (prim[k].is_zero()) ++k;
  const Rational scale = prim[k] / normal[k];
  return {prim, offset * scale};
}

Rational triangle_area2(const Point& a, const Point& b, const Point& c) {
  return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).abs();
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).sign();
}

std::vector<size_t> hull_cycle_2d(const std::vector<Point>& points) {
  std::vector<size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return points[a] < points[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](size_t a, size_t b) { return points[a] == points[b]; }),
            idx.end());
  if (idx.size() <= 2) return idx;

  // Andrew's monotone chain, dropping collinear points.
  std::vector<size_t> hull(2 * idx.size());
  size_t k = 0;
  for (size_t i : idx) {
    while (k >= 2 && orientation(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
    const size_t i = idx[j];
    while (k >= t && orientation(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  if (hull.size() < 2) return {idx.front(), idx.back()};
  return hull;
}

std::optional<std::vector<HullFace>> hull_faces_3d(const std::vector<Point>& points) {
  std::vector<size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return points[a] < points[b]; });
  order.erase(std::unique(order.begin(), order.end(), [&](size_t a, size_t b) { return points[a] == points[b]; }),
              order.end());
  if (order.size() < 4) return std::nullopt;

  const auto& P = points;
  const size_t i0 = order[0];
  const size_t i1 = order[1];
  size_t i2 = points.size();
  size_t i3 = points.size();
  Point n012;
  for (size_t i : order) {
    Point n = cross(P[i1] - P[i0], P[i] - P[i0]);
    if (!is_zero(n)) {
      i2 = i;
      n012 = n;
      break;
    }
  }
  if (i2 == points.size()) return std::nullopt;
  for (size_t i : order) {
    if (!dot(n012, P[i] - P[i0]).is_zero()) {
      i3 = i;
      break;
    }
  }
  if (i3 == points.size()) return std::nullopt;

  struct Tri {
    std::array<size_t, 3> v;
    Point normal;
    Rational offset;
  };
  auto make_tri = [&](size_t a, size_t b, size_t c) {
    Point n = cross(P[b] - P[a], P[c] - P[a]);
    Rational off = dot(n, P[a]);
    return Tri{{a, b, c}, std::move(n), std::move(off)};
  };
  auto oriented = [&](size_t a, size_t b, size_t c, size_t inside) {
    Tri t = make_tri(a, b, c);
    if (dot(t.normal, P[inside]) > t.offset) t = make_tri(a, c, b);
    return t;
  };

  std::vector<Tri> tris{oriented(i0, i1, i2, i3), oriented(i0, i1, i3, i2), oriented(i0, i2, i3, i1),
                        oriented(i1, i2, i3, i0)};

  for (size_t q : order) {
    if (q == i0 || q == i1 || q == i2 || q == i3) continue;
    std::vector<bool> visible(tris.size(), false);
    std::set<std::pair<size_t, size_t>> edges;
    bool any = false;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (dot(tris[t].normal, P[q]) > tris[t].offset) {
        visible[t] = true;
        any = true;
        const auto& v = tris[t].v;
        for (int e = 0; e < 3; ++e) edges.emplace(v[e], v[(e + 1) % 3]);
      }
    }
    if (!any) continue;
    std::vector<Tri> next;
    next.reserve(tris.size() + 4);
    for (size_t t = 0; t < tris.size(); ++t)
      if (!visible[t]) next.push_back(std::move(tris[t]));
    for (const auto& [a, b] : edges)
      if (!edges.count({b, a})) next.push_back(make_tri(a, b, q));
    tris = std::move(next);
  }

  std::map<std::pair<Point, Rational>, std::set<size_t>> groups;
  for (const auto& t : tris) {
    auto key = normalize_plane(t.normal, t.offset);
    groups[key].insert(t.v.begin(), t.v.end());
  }

  std::vector<HullFace> faces;
  faces.reserve(groups.size());
  for (const auto& [plane, ids] : groups) {
    const Point& normal = plane.first;
    size_t drop = 0;
    while (normal[drop].is_zero()) ++drop;
    std::vector<size_t> keep;
    for (size_t c = 0; c < 3; ++c)
      if (c != drop) keep.push_back(c);
    std::vector<size_t> id_list(ids.begin(), ids.end());
    std::vector<Point> flat;
    for (size_t id : id_list) flat.push_back(pick(P[id], keep));
    HullFace face{normal, plane.second, {}};
    for (size_t j : hull_cycle_2d(flat)) face.vertices.push_back(id_list[j]);
    faces.push_back(std::move(face));
  }
  return faces;
}

Polytope Polytope::hull(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  const size_t dim = points.front().size();
  return hull(std::move(points), dim);
}

Polytope Polytope::hull(std::vector<Point> points, size_t dim) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  if (dim < 1 || dim > 3) throw std::invalid_argument("convex hull supports dimensions 1 to 3");
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("point " + to_string(p) + " has the wrong dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope out;
  out.dim_ = dim;
  const std::vector<size_t> chart = affine_chart(points, dim);
  out.affine_dim_ = chart.size();

  std::vector<Point> proj;
  proj.reserve(points.size());
  for (const auto& p : points) proj.push_back(pick(p, chart));

  auto lift_normal = [&](const Point& local) {
    Point n(dim);
    for (size_t j = 0; j < chart.size(); ++j) n[chart[j]] = local[j];
    return n;
  };

  std::vector<size_t> vertex_ids;
  switch (out.affine_dim_) {
    case 0:
      vertex_ids = {0};
      break;
    case 1: {
      // Points are sorted lexicographically and collinear, so the extremes
      // are the first and last.
      vertex_ids = {0, points.size() - 1};
      const Rational lo = proj.front()[0];
      const Rational hi = proj.back()[0];
      out.facets_.push_back({lift_normal({Rational(-1)}), -lo});
      out.facets_.push_back({lift_normal({Rational(1)}), hi});
      if (hi < lo) throw std::logic_error("affine chart is not monotone");
      break;
    }
    case 2: {
      vertex_ids = hull_cycle_2d(proj);
      for (size_t id : vertex_ids) out.cycle_.push_back(points[id]);
      for (size_t i = 0; i < vertex_ids.size(); ++i) {
        const Point& a = proj[vertex_ids[i]];
        const Point& b = proj[vertex_ids[(i + 1) % vertex_ids.size()]];
        Point n = lift_normal({b[1] - a[1], a[0] - b[0]});
        auto [pn, off] = normalize_plane(n, dot(n, points[vertex_ids[i]]));
        out.facets_.push_back({std::move(pn), std::move(off)});
      }
      Rational area2;
      for (size_t i = 1; i + 1 < vertex_ids.size(); ++i)
        area2 += triangle_area2(proj[vertex_ids[0]], proj[vertex_ids[i]], proj[vertex_ids[i + 1]]);
      if (dim == 2) out.volume_ = area2 / 2;
      break;
    }
    case 3: {
      auto faces = hull_faces_3d(points);
      if (!faces) throw std::logic_error("3D hull reported coplanar input with affine dimension 3");
      std::set<size_t> ids;
      const Point o = [&] {
        Point c(3);
        for (const auto& p : points) c = c + p;
        return Rational(1, static_cast<long>(points.size())) * c;
      }();
      Rational vol6;
      for (const auto& f : *faces) {
        ids.insert(f.vertices.begin(), f.vertices.end());
        out.facets_.push_back({f.normal, f.offset});
        for (size_t i = 1; i + 1 < f.vertices.size(); ++i) {
          const Point a = points[f.vertices[0]] - o;
          const Point b = points[f.vertices[i]] - o;
          const Point c = points[f.vertices[i + 1]] - o;
          vol6 += dot(a, cross(b, c)).abs();
        }
      }
      vertex_ids.assign(ids.begin(), ids.end());
      out.volume_ = vol6 / 6;
      break;
    }
    default:
      throw std::logic_error("unexpected affine dimension");
  }
  if (out.affine_dim_ == 1 && dim == 1) out.volume_ = proj.back()[0] - proj.front()[0];

  for (size_t id : vertex_ids) out.vertices_.push_back(points[id]);
  std::sort(out.vertices_.begin(), out.vertices_.end());
  out.vertices_.erase(std::unique(out.vertices_.begin(), out.vertices_.end()), out.vertices_.end());
  std::sort(out.facets_.begin(), out.facets_.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });

  std::vector<std::vector<Rational>> dirs;
  for (size_t i = 1; i < points.size(); ++i) dirs.push_back(points[i] - points[0]);
  for (auto& n : kernel_basis(Matrix(std::move(dirs), dim))) {
    Rational off = dot(n, points[0]);
    out.equations_.push_back({std::move(n), std::move(off)});
  }
  return out;
}

bool Polytope::contains(const Point& x) const {
  if (x.size() != dim_) return false;
  for (const auto& e : equations_)
    if (!e.slack(x).is_zero()) return false;
  for (const auto& f : facets_)
    if (f.slack(x).sign() < 0) return false;
  return true;
}

bool Polytope::on_boundary(const Point& x) const {
  if (!contains(x)) return false;
  if (!full_dimensional()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Halfspace& f) { return f.slack(x).is_zero(); });
}

Point Polytope::vertex_centroid() const {
  Point c(dim_);
  for (const auto& v : vertices_) c = c + v;
  return Rational(1, static_cast<long>(vertices_.size())) * c;
}

Polytope Polytope::scaled(const Rational& factor, const Point& center) const {
  std::vector<Point> pts;
  for (const auto& v : vertices_) pts.push_back(center + factor * (v - center));
  return hull(std::move(pts), dim_);
}

ConcavePL::ConcavePL(Polytope domain, std::vector<AffinePiece> pieces, std::vector<Sample> samples)
    : domain_(std::move(domain)), pieces_(std::move(pieces)), samples_(std::move(samples)) {
  if (pieces_.empty()) throw std::invalid_argument("concave function needs at least one affine piece");
  std::sort(pieces_.begin(), pieces_.end(), [](const AffinePiece& a, const AffinePiece& b) {
    return std::tie(a.gradient, a.constant) < std::tie(b.gradient, b.constant);
  });
}

Rational ConcavePL::operator()(const Point& x) const {
  if (!domain_.contains(x)) throw std::invalid_argument("point " + to_string(x) + " is outside the domain");
  Rational best = pieces_.front()(x);
  for (size_t i = 1; i < pieces_.size(); ++i) best = min(best, pieces_[i](x));
  return best;
}

ConcavePL concave_envelope(std::vector<Sample> samples, const Polytope& domain) {
  const size_t n = domain.dim();
  if (n < 1 || n > 2) throw std::invalid_argument("concave envelopes need a domain of dimension 1 or 2");
  std::map<Point, Rational> best;
  for (const auto& s : samples) {
    if (s.point.size() != n) throw std::invalid_argument("sample " + to_string(s.point) + " has the wrong dimension");
    if (s.value.sign() < 0) throw std::invalid_argument("negative sample value at " + to_string(s.point));
    if (!domain.contains(s.point)) throw std::invalid_argument("sample " + to_string(s.point) + " lies outside the domain");
    auto [it, inserted] = best.emplace(s.point, s.value);
    if (!inserted) it->second = max(it->second, s.value);
  }
  for (const auto& w : domain.vertices()) best.emplace(w, Rational(0));

  std::vector<Point> base;
  for (const auto& [p, v] : best) base.push_back(p);
  const std::vector<size_t> chart = affine_chart(base, n);
  const size_t r = chart.size();

  // Lifted points in chart coordinates plus the value as last coordinate.
  std::vector<Point> lifted;
  std::map<Point, Point> original;  // chart projection -> original point
  for (const auto& [p, v] : best) {
    Point q = pick(p, chart);
    original.emplace(q, p);
    q.push_back(v);
    lifted.push_back(std::move(q));
  }

  auto make_piece = [&](const Point& normal, const Rational& offset, const std::vector<size_t>& ids) {
    // normal . (y, z) = offset with normal[r] > 0 => z = (offset - n_y . y) / n_r
    const Rational nz = normal[r];
    Point gradient(n);
    for (size_t j = 0; j < r; ++j) gradient[chart[j]] = -normal[j] / nz;
    std::vector<Point> cell_pts;
    for (size_t id : ids) {
      Point y(lifted[id].begin(), lifted[id].end() - 1);
      cell_pts.push_back(original.at(y));
    }
    return AffinePiece{std::move(gradient), offset / nz, Polytope::hull(std::move(cell_pts), n)};
  };

  auto whole_domain_piece = [&](const std::vector<size_t>& ids) {
    // All lifted points on one non-vertical affine subspace: interpolate.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (size_t id : ids) {
      Point row(lifted[id].begin(), lifted[id].end() - 1);
      row.push_back(1);
      rows.push_back(std::move(row));
      rhs.push_back(lifted[id].back());
    }
    auto coef = solve(Matrix(std::move(rows), r + 1), rhs);
    if (!coef) throw std::logic_error("degenerate hypograph is not a graph");
    Point gradient(n);
    for (size_t j = 0; j < r; ++j) gradient[chart[j]] = (*coef)[j];
    return AffinePiece{std::move(gradient), (*coef)[r], domain};
  };

  std::vector<size_t> all(lifted.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<AffinePiece> pieces;
  if (r == 0) {
    pieces.push_back(AffinePiece{Point(n), best.begin()->second, domain});
  } else if (r == 1) {
    const auto cycle = hull_cycle_2d(lifted);
    if (cycle.size() <= 2) {
      pieces.push_back(whole_domain_piece(all));
    } else {
      for (size_t i = 0; i < cycle.size(); ++i) {
        const Point& a = lifted[cycle[i]];
        const Point& b = lifted[cycle[(i + 1) % cycle.size()]];
        const Point normal{b[1] - a[1], a[0] - b[0]};
        if (normal[1].sign() > 0) pieces.push_back(make_piece(normal, dot(normal, a), {cycle[i], cycle[(i + 1) % cycle.size()]}));
      }
    }
  } else {
    auto faces = hull_faces_3d(lifted);
    if (!faces) {
      pieces.push_back(whole_domain_piece(all));
    } else {
      for (const auto& f : *faces)
        if (f.normal[2].sign() > 0) pieces.push_back(make_piece(f.normal, f.offset, f.vertices));
    }
  }

  std::vector<Sample> kept;
  kept.reserve(best.size());
  for (auto& [p, v] : best) kept.push_back({p, v});
  return ConcavePL(domain, std::move(pieces), std::move(kept));
}

Rational integrate(const ConcavePL& f) {
  const Polytope& dom = f.domain();
  if (!dom.full_dimensional()) return 0;
  Rational total;
  for (const auto& piece : f.pieces()) {
    const Polytope& cell = piece.cell;
    if (!cell.full_dimensional()) continue;
    if (dom.dim() == 1) {
      const Point& a = cell.vertices().front();
      const Point& b = cell.vertices().back();
      total += (b[0] - a[0]) * (piece(a) + piece(b)) / 2;
    } else {
      const auto& cyc = cell.cycle();
      for (size_t i = 1; i + 1 < cyc.size(); ++i) {
        const Rational area = triangle_area2(cyc[0], cyc[i], cyc[i + 1]) / 2;
        total += area * (piece(cyc[0]) + piece(cyc[i]) + piece(cyc[i + 1])) / 3;
      }
    }
  }
  return total;
}

QuadraticCapBody::QuadraticCapBody(std::vector<Halfspace> linear, Form quadratic, Point linear_part, Rational constant)
    : linear_(std::move(linear)), q_(std::move(quadratic)), l_(std::move(linear_part)), c_(std::move(constant)) {
  for (const auto& h : linear_)
    if (h.normal.size() != 2) throw std::invalid_argument("cap body constraints must be planar");
  if (l_.size() != 2) throw std::invalid_argument("cap body linear part must be planar");
  if (q_[0][1] != q_[1][0]) throw std::invalid_argument("quadratic form must be symmetric");
  const Rational det = q_[0][0] * q_[1][1] - q_[0][1] * q_[1][0];
  if (q_[0][0].sign() >= 0 || det.sign() <= 0) throw std::invalid_argument("quadratic form must be negative definite");
}

QuadraticCapBody QuadraticCapBody::disk_demo() {
  std::vector<Halfspace> lin{{{Rational(-1), Rational(0)}, 0}, {{Rational(1), Rational(0)}, 1}, {{Rational(0), Rational(-1)}, 0}};
  Form q{{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}}};
  return QuadraticCapBody(std::move(lin), q, {Rational(0), Rational(2)}, 0);
}

QuadraticCapBody QuadraticCapBody::disk(const Point& center, const Rational& r2) {
  if (center.size() != 2) throw std::invalid_argument("disk center must be planar");
  if (r2.sign() <= 0) throw std::invalid_argument("disk radius must be positive");
  Form q{{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}}};
  return QuadraticCapBody({}, q, Rational(2) * center, r2 - dot(center, center));
}

Rational QuadraticCapBody::quadratic_value(const Point& x) const {
  return q_[0][0] * x[0] * x[0] + Rational(2) * q_[0][1] * x[0] * x[1] + q_[1][1] * x[1] * x[1] + dot(l_, x) + c_;
}

bool QuadraticCapBody::contains(const Point& x) const {
  if (x.size() != 2) return false;
  for (const auto& h : linear_)
    if (h.slack(x).sign() < 0) return false;
  return quadratic_value(x).sign() >= 0;
}

bool QuadraticCapBody::on_boundary(const Point& x) const {
  if (!contains(x)) return false;
  if (quadratic_value(x).is_zero()) return true;
  return std::any_of(linear_.begin(), linear_.end(), [&](const Halfspace& h) { return h.slack(x).is_zero(); });
}

bool QuadraticCapBody::on_curved_arc(const Point& x) const { return contains(x) && quadratic_value(x).is_zero(); }

bool body_contains(const Body& body, const Point& x) {
  return std::visit([&](const auto& b) { return b.contains(x); }, body);
}

bool body_on_boundary(const Body& body, const Point& x) {
  return std::visit([&](const auto& b) { return b.on_boundary(x); }, body);
}

bool is_locally_cone(const Body& body, const Point& p) {
  if (!body_on_boundary(body, p)) throw std::invalid_argument("point " + to_string(p) + " is not on the boundary");
  const auto* cap = std::get_if<QuadraticCapBody>(&body);
  if (!cap || !cap->quadratic_value(p).is_zero()) return true;

  // The quadratic constraint is active at p. The body is a cone near p iff the
  // constraint is redundant on the tangent cone T of the active linear
  // constraints, i.e. grad q(p) . d > 0 on every extreme ray d of T.
  const auto& Q = cap->quadratic();
  const Point grad{Rational(2) * (Q[0][0] * p[0] + Q[0][1] * p[1]) + cap->linear_part()[0],
                   Rational(2) * (Q[1][0] * p[0] + Q[1][1] * p[1]) + cap->linear_part()[1]};
  std::vector<Point> active;
  for (const auto& h : cap->linear())
    if (h.slack(p).is_zero()) active.push_back(h.normal);
  if (active.empty()) return false;

  auto in_tangent_cone = [&](const Point& d) {
    return std::all_of(active.begin(), active.end(), [&](const Point& n) { return dot(n, d).sign() <= 0; });
  };
  std::vector<Point> rays;
  for (const auto& n : active) {
    for (const Point& d : {Point{-n[1], n[0]}, Point{n[1], -n[0]}}) {
      if (in_tangent_cone(d)) rays.push_back(d);
    }
  }
  for (const auto& d : rays)
    if (in_tangent_cone(Rational(-1) * d)) return false;  // T contains a line
  return std::all_of(rays.begin(), rays.end(), [&](const Point& d) { return dot(grad, d).sign() > 0; });
}

Enclosure min(const Enclosure& a, const Enclosure& b) { return {min(a.lo, b.lo), min(a.hi, b.hi)}; }

namespace {

/// Largest t in [0,1] with h >= 0 on [0, t], for h(t) = a t^2 + b t + c and
/// h(0) = c >= 0.
Enclosure quadratic_feasible_sup(const Rational& a, const Rational& b, const Rational& c, unsigned bits) {
  auto h = [&](const Rational& t) { return (a * t + b) * t + c; };
  if (a.is_zero() && b.is_zero() && c.is_zero()) return Enclosure::exactly(1);
  const int right_sign = !c.is_zero() ? c.sign() : !b.is_zero() ? b.sign() : a.sign();
  if (right_sign < 0) return Enclosure::exactly(0);

  std::optional<std::pair<Rational, Rational>> exact_roots;
  if (!a.is_zero()) {
    const Rational disc = b * b - Rational(4) * a * c;
    if (disc.sign() >= 0 && mpz_perfect_square_p(disc.num().get_mpz_t()) && mpz_perfect_square_p(disc.den().get_mpz_t())) {
      const Rational root(isqrt(disc.num()), isqrt(disc.den()));
      exact_roots = {(-b - root) / (Rational(2) * a), (-b + root) / (Rational(2) * a)};
    }
  } else {
    exact_roots = {-c / b, -c / b};
  }

  std::vector<Rational> breaks{Rational(0)};
  if (!a.is_zero()) {
    const Rational vertex = -b / (Rational(2) * a);
    if (vertex.sign() > 0 && vertex < Rational(1)) breaks.push_back(vertex);
  }
  breaks.push_back(1);

  const Rational tolerance = Rational(BigInt(1), BigInt(1) << bits);
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Rational& lo0 = breaks[i];
    const Rational& hi0 = breaks[i + 1];
    const Rational h_hi = h(hi0);
    if (h_hi.sign() > 0) continue;
    if (h_hi.is_zero()) {
      if (hi0 == Rational(1)) return Enclosure::exactly(1);
      continue;  // touches zero at the vertex
    }
    if (i > 0 && h(lo0).is_zero()) return Enclosure::exactly(lo0);
    // h is monotone on [lo0, hi0], positive just after lo0 and negative at hi0.
    if (exact_roots) {
      for (const Rational& r : {exact_roots->first, exact_roots->second})
        if (lo0 < r && r < hi0) return Enclosure::exactly(r);
    }
    Rational lo = lo0;
    Rational hi = hi0;
    while (hi - lo > tolerance) {
      const Rational mid = (lo + hi) / 2;
      const int s = h(mid).sign();
      if (s == 0) return Enclosure::exactly(mid);
      (s > 0 ? lo : hi) = mid;
    }
    return {lo, hi};
  }
  return Enclosure::exactly(1);
}

Enclosure linear_sup(const std::vector<Halfspace>& constraints, const Point& p, const Point& x) {
  Enclosure out = Enclosure::exactly(1);
  for (const auto& h : constraints) {
    const Rational at_center = h.slack(p);
    if (at_center.sign() > 0) out = min(out, Enclosure::exactly(h.slack(x) / at_center));
  }
  return out;
}

}  // namespace

Enclosure homothety_sup(const Body& body, const Point& p, const Point& x, unsigned precision_bits) {
  if (!body_contains(body, p)) throw std::invalid_argument("homothety center " + to_string(p) + " is outside the body");
  if (!body_contains(body, x)) throw std::invalid_argument("point " + to_string(x) + " is outside the body");
  if (x == p) return Enclosure::exactly(1);

  if (const auto* poly = std::get_if<Polytope>(&body)) return linear_sup(poly->facets(), p, x);

  const auto& cap = std::get<QuadraticCapBody>(body);
  Enclosure out = linear_sup(cap.linear(), p, x);
  const auto& Q = cap.quadratic();
  auto form = [&](const Point& u, const Point& w) {
    return Q[0][0] * u[0] * w[0] + Q[0][1] * (u[0] * w[1] + u[1] * w[0]) + Q[1][1] * u[1] * w[1];
  };
  const Point& L = cap.linear_part();
  const Rational& c = cap.constant();
  const Rational qa = form(p, p) + dot(L, p) + c;
  const Rational qb = Rational(-2) * form(x, p) - dot(L, x) - dot(L, p) - Rational(2) * c;
  const Rational qc = form(x, x) + dot(L, x) + c;
  return min(out, quadratic_feasible_sup(qa, qb, qc, precision_bits));
}

}  // namespace okb
