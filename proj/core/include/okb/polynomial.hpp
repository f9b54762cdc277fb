#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okb/matrix.hpp"
#include "okb/rational.hpp"

namespace okb {

/// Exponent vector of a monomial in at most three variables (unused slots 0).
using Exponent = std::array<long, 3>;

/// Names of the homogeneous coordinates: X, Y, Z.
char variable_name(size_t var);

/// Homogeneous polynomial with exact coefficients in 2 or 3 variables.
class Polynomial {
 public:
  explicit Polynomial(size_t nvars = 3) : nvars_(nvars) {}

  static Polynomial monomial(size_t nvars, const Exponent& e, const Rational& coeff = 1);
  static Polynomial variable(size_t nvars, size_t var) {
    Exponent e{};
    e[var] = 1;
    return monomial(nvars, e);
  }
  /// Parses sums of terms such as "X*Y - 2*Z^2" or "1/2 X^2 + Y Z".
  static Polynomial parse(std::string_view text, size_t nvars);

  size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; throws std::logic_error if not homogeneous or zero.
  long degree() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rational evaluate(const Point& x) const;
  Polynomial pow(unsigned e) const;
  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, Polynomial b) { return a += (b *= Rational(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

/// How monomials are ranked by the flag valuation: the key of X^e is
/// (e[key_vars[0]], e[key_vars[1]], ...).
struct FlagOrder {
  std::vector<size_t> key_vars;

  std::vector<long> key(const Exponent& e) const;
};

/// All monomials of one degree, sorted lexicographically by flag key so that
/// the flag valuation of a polynomial is the key of its first nonzero entry.
class MonomialBasis {
 public:
  MonomialBasis(size_t nvars, long degree, FlagOrder order);

  size_t nvars() const { return nvars_; }
  long degree() const { return degree_; }
  const FlagOrder& order() const { return order_; }
  size_t size() const { return monomials_.size(); }
  const Exponent& operator[](size_t i) const { return monomials_[i]; }
  const std::vector<long>& key(size_t i) const { return keys_[i]; }
  std::optional<size_t> index_of(const Exponent& e) const;
  /// Index of the monomial with the given flag key, if any.
  std::optional<size_t> index_of_key(const std::vector<long>& key) const;

  std::vector<Rational> coefficients(const Polynomial& p) const;
  Polynomial polynomial(const std::vector<Rational>& coeffs) const;

 private:
  size_t nvars_;
  long degree_;
  FlagOrder order_;
  std::vector<Exponent> monomials_;
  std::vector<std::vector<long>> keys_;
  std::map<Exponent, size_t> index_;
  std::map<std::vector<long>, size_t> key_index_;
};

/// Rows whose common kernel is {F : mult_P(F) >= m}: all partial derivatives of
/// order m - 1 vanish at P. For m > degree every coefficient must vanish.
Matrix multiplicity_conditions(const MonomialBasis& basis, const Point& point, long m);

/// Rows whose common kernel is {F : g^t divides F}.
Matrix divisibility_conditions(const MonomialBasis& basis, const Polynomial& g, long t);

/// Multiplicity of F at P (F nonzero).
long multiplicity_at(const Polynomial& f, const Point& point);

}  // namespace okb
