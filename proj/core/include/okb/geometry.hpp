#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "okb/rational.hpp"

namespace okb {

/// The closed half-space {x : normal . x <= offset}.
struct Halfspace {
  Point normal;
  Rational offset;

  Rational slack(const Point& x) const { return offset - dot(normal, x); }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Convex hull of finitely many rational points in R^1, R^2 or R^3.
///
/// Vertices are kept in lexicographic order. Lower-dimensional inputs are
/// accepted and report their affine dimension; the H-representation then
/// describes the polytope inside its affine hull together with the equations
/// of that hull.
class Polytope {
 public:
  Polytope() = default;

  /// Exact convex hull. `points` must be non-empty and all of dimension `dim`.
  static Polytope hull(std::vector<Point> points, size_t dim);
  static Polytope hull(std::vector<Point> points);

  size_t dim() const { return dim_; }
  size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }

  /// For two-dimensional polytopes, vertices in counter-clockwise order of the
  /// projection onto the chosen affine coordinates.
  const std::vector<Point>& cycle() const { return cycle_; }

  /// Facet inequalities (within the affine hull).
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Equations normal . x = offset cutting out the affine hull.
  const std::vector<Halfspace>& equations() const { return equations_; }

  bool contains(const Point& x) const;
  /// Boundary in R^dim: every point of a lower-dimensional polytope, otherwise
  /// points with a tight facet.
  bool on_boundary(const Point& x) const;

  /// Lebesgue measure in R^dim (zero for lower-dimensional polytopes).
  Rational volume() const { return volume_; }
  Point vertex_centroid() const;

  /// Image under x -> center + factor (x - center).
  Polytope scaled(const Rational& factor, const Point& center) const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.dim_ == b.dim_ && a.vertices_ == b.vertices_; }

 private:
  size_t dim_ = 0;
  size_t affine_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Point> cycle_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
  Rational volume_;
};

/// Polygon face of a three-dimensional hull.
struct HullFace {
  Point normal;  // outward, primitive integer
  Rational offset;
  std::vector<size_t> vertices;  // indices into the input, extreme points only
};

/// Full-dimensional 3D hull by incremental insertion. Returns nullopt when the
/// points are coplanar.
std::optional<std::vector<HullFace>> hull_faces_3d(const std::vector<Point>& points);

/// Convex hull vertices of 2D points in counter-clockwise order (collinear
/// boundary points dropped). Indices refer to `points`.
std::vector<size_t> hull_cycle_2d(const std::vector<Point>& points);

/// Sign of the 2x2 orientation determinant (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

/// Affine function x -> gradient . x + constant, valid on `cell`.
struct AffinePiece {
  Point gradient;
  Rational constant;
  Polytope cell;

  Rational operator()(const Point& x) const { return dot(gradient, x) + constant; }
};

struct Sample {
  Point point;
  Rational value;
};

/// Concave piecewise-linear function on a polytope in R^1 or R^2, stored as
/// the upper facets of a hypograph hull. Pieces are sorted by gradient, then
/// constant.
class ConcavePL {
 public:
  ConcavePL(Polytope domain, std::vector<AffinePiece> pieces, std::vector<Sample> samples);

  const Polytope& domain() const { return domain_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const std::vector<Sample>& samples() const { return samples_; }

  /// Value at x; throws std::invalid_argument when x is outside the domain.
  Rational operator()(const Point& x) const;

 private:
  Polytope domain_;
  std::vector<AffinePiece> pieces_;
  std::vector<Sample> samples_;
};

/// Closed concave envelope of the function equal to the sample values on the
/// sample points and 0 elsewhere on `domain`. Values must be non-negative and
/// points must lie in the domain.
ConcavePL concave_envelope(std::vector<Sample> samples, const Polytope& domain);

/// Exact integral over the domain (zero for lower-dimensional domains).
Rational integrate(const ConcavePL& f);

/// Planar body {x : linear constraints} ∩ {x : x^T Q x + L.x + c >= 0} with Q
/// negative definite, so the quadratic part is an elliptic disk and the
/// boundary arc it contributes is strictly curved.
class QuadraticCapBody {
 public:
  using Form = std::array<std::array<Rational, 2>, 2>;

  QuadraticCapBody(std::vector<Halfspace> linear, Form quadratic, Point linear_part, Rational constant);

  /// {(a,b) : 0 <= a <= 1, b >= 0, (1-b)^2 + a^2 <= 1}.
  static QuadraticCapBody disk_demo();
  /// Closed disk of squared radius r2 around center.
  static QuadraticCapBody disk(const Point& center, const Rational& r2);

  const std::vector<Halfspace>& linear() const { return linear_; }
  const Form& quadratic() const { return q_; }
  const Point& linear_part() const { return l_; }
  const Rational& constant() const { return c_; }

  Rational quadratic_value(const Point& x) const;
  bool contains(const Point& x) const;
  bool on_boundary(const Point& x) const;
  bool on_curved_arc(const Point& x) const;

 private:
  std::vector<Halfspace> linear_;
  Form q_;
  Point l_;
  Rational c_;
};

using Body = std::variant<Polytope, QuadraticCapBody>;

bool body_contains(const Body& body, const Point& x);
bool body_on_boundary(const Body& body, const Point& x);

/// True iff near p the body coincides with p + (convex cone). Polytopes are
/// locally cones everywhere. Throws std::invalid_argument when p is not a
/// boundary point.
bool is_locally_cone(const Body& body, const Point& p);

/// A real number known to lie in [lo, hi]; exact when lo == hi.
struct Enclosure {
  Rational lo;
  Rational hi;

  static Enclosure exactly(const Rational& v) { return {v, v}; }
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

Enclosure min(const Enclosure& a, const Enclosure& b);

/// sup{t in [0,1] : x in t p + (1 - t) body}. Linear constraints give exact
/// rationals; the quadratic constraint gives a root isolated by exact sign
/// bisection to width <= 2^-precision_bits unless it is rational.
Enclosure homothety_sup(const Body& body, const Point& p, const Point& x, unsigned precision_bits = 40);

}  // namespace okb
