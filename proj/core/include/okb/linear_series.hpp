#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "okb/matrix.hpp"
#include "okb/polynomial.hpp"
#include "okb/rational.hpp"

namespace okb {

enum class Model { P1, P2, BlowupP2 };

std::string to_string(Model m);

/// Coordinate flag. On P2 the line is {x[line_var] = 0} and the point P0 is
/// the coordinate point where x[line_var] = x[point_var] = 0. On P1 the flag
/// point is {x[point_var] = 0}.
struct Flag {
  size_t line_var = 0;
  size_t point_var = 1;

  friend bool operator==(const Flag&, const Flag&) = default;
};

/// Ambient model, blown-up points and flag.
class GeometrySpec {
 public:
  static GeometrySpec p1();
  static GeometrySpec p2(Flag flag = {});
  static GeometrySpec blowup(std::vector<Point> points, Flag flag = {});

  /// P1 = [1:0:0].
  static Point default_p1();
  /// P2 = [1:1:1] off the line through P0 and P1.
  static Point generic_p2();
  /// P2 = [1:0:1] on the line {Y = 0} through P0 and P1.
  static Point collinear_p2();

  Model model() const { return model_; }
  const std::vector<Point>& blown_up_points() const { return points_; }
  const Flag& flag() const { return flag_; }
  size_t nvars() const { return model_ == Model::P1 ? 2 : 3; }
  size_t rank() const { return nvars() - 1; }
  FlagOrder flag_order() const;
  /// P0 on P2 models, p on P1.
  Point flag_point() const;
  /// Equation of the flag line (of the flag point on P1).
  Polynomial flag_divisor() const;

  friend bool operator==(const GeometrySpec&, const GeometrySpec&) = default;

 private:
  GeometrySpec(Model model, std::vector<Point> points, Flag flag);

  Model model_ = Model::P2;
  std::vector<Point> points_;
  Flag flag_;
};

/// d H - sum lambda_i E_i (on P1 just the degree).
struct DivisorClass {
  Rational degree;
  std::vector<Rational> multiplicities;

  DivisorClass scaled(const Rational& m) const;
  /// The bigness window: d > 0 and every lambda_i < d.
  bool big() const;
  std::string str() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// A subspace of the degree-n forms, given by linear conditions on monomial
/// coefficients. The basis is row-reduced in flag order, so its leading
/// positions are exactly the flag valuations attained in the subspace.
class SectionSpace {
 public:
  SectionSpace(std::shared_ptr<const MonomialBasis> monomials, Matrix conditions);

  const MonomialBasis& monomials() const { return *monomials_; }
  std::shared_ptr<const MonomialBasis> monomials_ptr() const { return monomials_; }
  const Matrix& conditions() const { return conditions_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }
  /// Leading monomial index of each basis vector, increasing.
  const std::vector<size_t>& leads() const { return leads_; }

  bool contains(const std::vector<Rational>& coeffs) const;
  SectionSpace with(const Matrix& extra_conditions) const;
  std::vector<Polynomial> sections() const;

 private:
  std::shared_ptr<const MonomialBasis> monomials_;
  Matrix conditions_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<size_t> leads_;
};

/// Dimension of the subspace of degree-n forms cut out by `conditions`.
size_t solution_dim(const Matrix& conditions);

/// The graded piece V_k of the complete series of a divisor class.
class LinearSeries {
 public:
  /// Throws std::invalid_argument if k*d or some k*lambda_i is not an integer.
  static LinearSeries build(const GeometrySpec& geometry, const DivisorClass& divisor, long level);

  const GeometrySpec& geometry() const { return geometry_; }
  const DivisorClass& divisor() const { return divisor_; }
  long level() const { return level_; }
  long degree() const { return space_.monomials().degree(); }
  /// k * lambda_i.
  const std::vector<long>& point_orders() const { return orders_; }
  const MonomialBasis& monomials() const { return space_.monomials(); }
  const SectionSpace& space() const { return space_; }
  size_t dim() const { return space_.dim(); }

  bool contains(const Polynomial& f) const;

 private:
  LinearSeries(GeometrySpec geometry, DivisorClass divisor, long level, std::vector<long> orders, SectionSpace space);

  GeometrySpec geometry_;
  DivisorClass divisor_;
  long level_;
  std::vector<long> orders_;
  SectionSpace space_;
};

/// The graded series k -> V_k of one divisor class.
class SeriesFamily {
 public:
  /// Validates the geometry (admissible flag, distinct points) and divisor.
  SeriesFamily(GeometrySpec geometry, DivisorClass divisor);

  const GeometrySpec& geometry() const { return geometry_; }
  const DivisorClass& divisor() const { return divisor_; }
  /// Smallest level with integral data; integral levels are its multiples.
  long step() const { return step_; }
  bool integral_at(long k) const { return k > 0 && k % step_ == 0; }
  std::vector<long> levels(long max_level) const;
  LinearSeries level(long k) const { return LinearSeries::build(geometry_, divisor_, k); }
  /// The Veronese series k -> V_{mk}, realized as the series of m D.
  SeriesFamily veronese(long m) const;

 private:
  GeometrySpec geometry_;
  DivisorClass divisor_;
  long step_;
};

/// Geometric valuation: order of vanishing at a point, along a curve, or
/// along an exceptional divisor.
struct ValuationSpec {
  enum class Kind { Point, Curve, Exceptional };

  Kind kind = Kind::Point;
  Point point;
  Polynomial curve;
  size_t index = 0;

  static ValuationSpec at_point(Point p) { return {Kind::Point, std::move(p), Polynomial(), 0}; }
  static ValuationSpec along_curve(Polynomial g) { return {Kind::Curve, {}, std::move(g), 0}; }
  static ValuationSpec along_exceptional(size_t i) { return {Kind::Exceptional, {}, Polynomial(), i}; }

  std::string str() const;
};

/// Rows cutting out {s in V : val(s) >= t} inside the ambient forms of V.
Matrix valuation_conditions(const LinearSeries& series, const ValuationSpec& val, long t);

/// Basis of {s in V : val(s) >= t}.
SectionSpace subspace_with_vanishing(const LinearSeries& series, const ValuationSpec& val, long t);

/// dim {s in V : val(s) >= t}.
size_t vanishing_dim(const LinearSeries& series, const ValuationSpec& val, long t);

/// val(s) for a nonzero section s of V.
long valuation_of(const LinearSeries& series, const ValuationSpec& val, const Polynomial& s);

/// A t with {val >= t} = 0 in V, from degree bounds.
long valuation_bound(const LinearSeries& series, const ValuationSpec& val);

}  // namespace okb
