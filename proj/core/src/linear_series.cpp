#include "okb/linear_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace okb {

std::string to_string(Model m) {
  switch (m) {
    case Model::P1: return "P1";
    case Model::P2: return "P2";
    case Model::BlowupP2: return "BlowupP2";
  }
  return "?";
}

namespace {

bool is_zero_vector(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); });
}

bool projectively_equal(const Point& a, const Point& b) {
  return rank(Matrix({a, b})) == 1;
}

long integral_or_throw(const Rational& x, const std::string& what) {
  if (!x.is_integer()) throw std::invalid_argument(what + " = " + x.str() + " is not an integer; choose a divisible level");
  return x.num().get_si();
}

}  // namespace

GeometrySpec::GeometrySpec(Model model, std::vector<Point> points, Flag flag)
    : model_(model), points_(std::move(points)), flag_(flag) {
  if (model_ == Model::P1) {
    if (flag_.point_var > 1) throw std::invalid_argument("P1 flag point must be a coordinate point");
    if (!points_.empty()) throw std::invalid_argument("P1 has no blown-up points");
    return;
  }
  if (flag_.line_var > 2 || flag_.point_var > 2 || flag_.line_var == flag_.point_var)
    throw std::invalid_argument("flag must use two distinct coordinates of P2");
  if (model_ == Model::P2 && !points_.empty()) throw std::invalid_argument("P2 has no blown-up points");
  if (model_ == Model::BlowupP2) {
    if (points_.empty() || points_.size() > 2) throw std::invalid_argument("blow-ups at one or two points only");
    for (size_t i = 0; i < points_.size(); ++i) {
      const Point& p = points_[i];
      if (p.size() != 3 || is_zero_vector(p)) throw std::invalid_argument("blown-up point must be a point of P2");
      if (p[flag_.line_var].is_zero())
        throw std::invalid_argument("blown-up point " + to_string(p) + " lies on the flag line");
      for (size_t j = 0; j < i; ++j)
        if (projectively_equal(p, points_[j])) throw std::invalid_argument("blown-up points must be distinct");
    }
  }
}

GeometrySpec GeometrySpec::p1() { return GeometrySpec(Model::P1, {}, Flag{0, 0}); }
GeometrySpec GeometrySpec::p2(Flag flag) { return GeometrySpec(Model::P2, {}, flag); }
GeometrySpec GeometrySpec::blowup(std::vector<Point> points, Flag flag) {
  return GeometrySpec(Model::BlowupP2, std::move(points), flag);
}

Point GeometrySpec::default_p1() { return make_point({1, 0, 0}); }
Point GeometrySpec::generic_p2() { return make_point({1, 1, 1}); }
Point GeometrySpec::collinear_p2() { return make_point({1, 0, 1}); }

FlagOrder GeometrySpec::flag_order() const {
  if (model_ == Model::P1) return FlagOrder{{flag_.point_var}};
  return FlagOrder{{flag_.line_var, flag_.point_var}};
}

Point GeometrySpec::flag_point() const {
  Point p(nvars(), Rational(0));
  if (model_ == Model::P1) {
    p[1 - flag_.point_var] = 1;
  } else {
    p[3 - flag_.line_var - flag_.point_var] = 1;
  }
  return p;
}

Polynomial GeometrySpec::flag_divisor() const {
  return Polynomial::variable(nvars(), model_ == Model::P1 ? flag_.point_var : flag_.line_var);
}

DivisorClass DivisorClass::scaled(const Rational& m) const {
  DivisorClass out{degree * m, multiplicities};
  for (auto& x : out.multiplicities) x *= m;
  return out;
}

bool DivisorClass::big() const {
  if (degree.sign() <= 0) return false;
  return std::all_of(multiplicities.begin(), multiplicities.end(), [&](const Rational& l) { return l < degree; });
}

std::string DivisorClass::str() const {
  std::string out = degree.str() + "H";
  for (size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i].is_zero()) continue;
    out += " - " + multiplicities[i].str() + "E" + std::to_string(i + 1);
  }
  return out;
}

SectionSpace::SectionSpace(std::shared_ptr<const MonomialBasis> monomials, Matrix conditions)
    : monomials_(std::move(monomials)), conditions_(std::move(conditions)) {
  const size_t n = monomials_->size();
  if (conditions_.cols() != n) throw std::invalid_argument("conditions do not match the monomial basis");
  if (conditions_.rows() == 0) {
    for (size_t i = 0; i < n; ++i) {
      std::vector<Rational> e(n);
      e[i] = 1;
      basis_.push_back(std::move(e));
      leads_.push_back(i);
    }
    return;
  }
  std::vector<std::vector<Rational>> kernel = kernel_basis(conditions_);
  if (kernel.empty()) return;
  const EchelonForm ef = echelon(Matrix(std::move(kernel), n), true);
  leads_ = ef.pivots;
  basis_.reserve(ef.rows.size());
  for (const auto& row : ef.rows) {
    std::vector<Rational> r(n);
    for (size_t j = 0; j < n; ++j)
      if (row[j] != 0) r[j] = Rational(row[j]);
    basis_.push_back(std::move(r));
  }
}

bool SectionSpace::contains(const std::vector<Rational>& coeffs) const {
  const auto values = conditions_.apply(coeffs);
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.is_zero(); });
}

SectionSpace SectionSpace::with(const Matrix& extra_conditions) const {
  return SectionSpace(monomials_, conditions_.stacked(extra_conditions));
}

std::vector<Polynomial> SectionSpace::sections() const {
  std::vector<Polynomial> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(monomials_->polynomial(b));
  return out;
}

size_t solution_dim(const Matrix& conditions) { return conditions.cols() - rank(conditions); }

LinearSeries::LinearSeries(GeometrySpec geometry, DivisorClass divisor, long level, std::vector<long> orders,
                           SectionSpace space)
    : geometry_(std::move(geometry)),
      divisor_(std::move(divisor)),
      level_(level),
      orders_(std::move(orders)),
      space_(std::move(space)) {}

LinearSeries LinearSeries::build(const GeometrySpec& geometry, const DivisorClass& divisor, long level) {
  if (level <= 0) throw std::invalid_argument("level must be positive");
  if (divisor.multiplicities.size() != geometry.blown_up_points().size())
    throw std::invalid_argument("divisor needs one multiplicity per blown-up point");
  const long degree = integral_or_throw(divisor.degree * Rational(level), "k*d");
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<long> orders;
  for (const auto& l : divisor.multiplicities) {
    const long m = integral_or_throw(l * Rational(level), "k*lambda");
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    orders.push_back(m);
  }
  auto monomials = std::make_shared<const MonomialBasis>(geometry.nvars(), degree, geometry.flag_order());
  Matrix conditions(0, monomials->size());
  for (size_t i = 0; i < orders.size(); ++i)
    conditions = conditions.stacked(multiplicity_conditions(*monomials, geometry.blown_up_points()[i], orders[i]));
  SectionSpace space(monomials, std::move(conditions));
  return LinearSeries(geometry, divisor, level, std::move(orders), std::move(space));
}

bool LinearSeries::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (f.nvars() != geometry_.nvars() || f.degree() != degree()) return false;
  return space_.contains(monomials().coefficients(f));
}

SeriesFamily::SeriesFamily(GeometrySpec geometry, DivisorClass divisor)
    : geometry_(std::move(geometry)), divisor_(std::move(divisor)) {
  if (divisor_.multiplicities.size() != geometry_.blown_up_points().size())
    throw std::invalid_argument("divisor needs one multiplicity per blown-up point");
  if (divisor_.degree.sign() < 0) throw std::invalid_argument("degree must be non-negative");
  BigInt den = divisor_.degree.den();
  for (const auto& l : divisor_.multiplicities) {
    if (l.sign() < 0) throw std::invalid_argument("multiplicities must be non-negative");
    den = lcm(den, l.den());
  }
  step_ = den.get_si();
}

std::vector<long> SeriesFamily::levels(long max_level) const {
  std::vector<long> out;
  for (long k = step_; k <= max_level; k += step_) out.push_back(k);
  return out;
}

SeriesFamily SeriesFamily::veronese(long m) const {
  if (m < 1) throw std::invalid_argument("Veronese factor must be positive");
  return SeriesFamily(geometry_, divisor_.scaled(Rational(m)));
}

std::string ValuationSpec::str() const {
  switch (kind) {
    case Kind::Point: return "ord_" + to_string(point);
    case Kind::Curve: return "ord_{" + curve.str() + "=0}";
    case Kind::Exceptional: return "ord_E" + std::to_string(index + 1);
  }
  return "?";
}

namespace {

void check_valuation(const LinearSeries& series, const ValuationSpec& val) {
  const GeometrySpec& g = series.geometry();
  switch (val.kind) {
    case ValuationSpec::Kind::Point:
      if (val.point.size() != g.nvars() || is_zero_vector(val.point))
        throw std::invalid_argument("valuation point " + to_string(val.point) + " is not a point of " + to_string(g.model()));
      for (const auto& p : g.blown_up_points())
        if (projectively_equal(p, val.point))
          throw std::invalid_argument("point valuation at a blown-up point; use the exceptional divisor");
      break;
    case ValuationSpec::Kind::Curve:
      if (g.model() == Model::P1) throw std::invalid_argument("curve valuations need a surface");
      if (val.curve.nvars() != g.nvars() || val.curve.is_zero() || val.curve.degree() < 1)
        throw std::invalid_argument("curve valuation needs a nonconstant form in X, Y, Z");
      break;
    case ValuationSpec::Kind::Exceptional:
      if (val.index >= g.blown_up_points().size()) throw std::invalid_argument("no exceptional divisor E" + std::to_string(val.index + 1));
      break;
  }
}

}  // namespace

Matrix valuation_conditions(const LinearSeries& series, const ValuationSpec& val, long t) {
  check_valuation(series, val);
  const MonomialBasis& basis = series.monomials();
  if (t <= 0) return Matrix(0, basis.size());
  switch (val.kind) {
    case ValuationSpec::Kind::Point: return multiplicity_conditions(basis, val.point, t);
    case ValuationSpec::Kind::Curve: return divisibility_conditions(basis, val.curve, t);
    case ValuationSpec::Kind::Exceptional:
      return multiplicity_conditions(basis, series.geometry().blown_up_points()[val.index],
                                     series.point_orders()[val.index] + t);
  }
  return Matrix(0, basis.size());
}

SectionSpace subspace_with_vanishing(const LinearSeries& series, const ValuationSpec& val, long t) {
  return series.space().with(valuation_conditions(series, val, t));
}

size_t vanishing_dim(const LinearSeries& series, const ValuationSpec& val, long t) {
  return solution_dim(series.space().conditions().stacked(valuation_conditions(series, val, t)));
}

long valuation_of(const LinearSeries& series, const ValuationSpec& val, const Polynomial& s) {
  check_valuation(series, val);
  if (s.is_zero()) throw std::invalid_argument("valuation of the zero section");
  if (!series.contains(s)) throw std::invalid_argument("section " + s.str() + " is not in V_" + std::to_string(series.level()));
  switch (val.kind) {
    case ValuationSpec::Kind::Point: return multiplicity_at(s, val.point);
    case ValuationSpec::Kind::Curve: {
      const auto coeffs = series.monomials().coefficients(s);
      long t = 0;
      while (true) {
        const auto values = divisibility_conditions(series.monomials(), val.curve, t + 1).apply(coeffs);
        if (std::any_of(values.begin(), values.end(), [](const Rational& v) { return !v.is_zero(); })) return t;
        ++t;
      }
    }
    case ValuationSpec::Kind::Exceptional:
      return multiplicity_at(s, series.geometry().blown_up_points()[val.index]) - series.point_orders()[val.index];
  }
  return 0;
}

long valuation_bound(const LinearSeries& series, const ValuationSpec& val) {
  check_valuation(series, val);
  const long n = series.degree();
  switch (val.kind) {
    case ValuationSpec::Kind::Point: return n + 1;
    case ValuationSpec::Kind::Curve: return n / val.curve.degree() + 1;
    case ValuationSpec::Kind::Exceptional: return n - series.point_orders()[val.index] + 1;
  }
  return n + 1;
}

}  // namespace okb
