#include "okb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace okb {

char variable_name(size_t var) {
  static constexpr char names[] = {'X', 'Y', 'Z'};
  if (var >= 3) throw std::out_of_range("variable index out of range");
  return names[var];
}

Polynomial Polynomial::monomial(size_t nvars, const Exponent& e, const Rational& coeff) {
  Polynomial p(nvars);
  if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
  return p;
}

long Polynomial::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  const auto deg = [](const Exponent& e) { return e[0] + e[1] + e[2]; };
  const long d = deg(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (deg(e) != d) throw std::logic_error("polynomial is not homogeneous: " + str());
  return d;
}

Rational Polynomial::evaluate(const Point& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("evaluate: point has the wrong dimension");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < nvars_; ++i) term *= okb::pow(x[i], static_cast<unsigned>(e[i]));
    total += term;
  }
  return total;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = monomial(nvars_, Exponent{});
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials in different rings");
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto [it, inserted] = out.terms_.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    std::string factors;
    for (size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += variable_name(v);
      if (e[v] > 1) factors += "^" + std::to_string(e[v]);
    }
    if (constant || mag != Rational(1)) {
      out += mag.str();
      if (!constant) out += "*";
    }
    out += factors;
  }
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, size_t nvars) : s_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial out(nvars_);
    skip_space();
    if (at_end()) throw error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      out += term(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  Polynomial term(const Rational& sign) {
    Rational coeff = sign;
    Exponent e{};
    bool any = false;
    while (!at_end() && peek() != '+' && peek() != '-') {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (c == 'X' || c == 'Y' || c == 'Z' || c == 'x' || c == 'y' || c == 'z') {
        const size_t var = static_cast<size_t>(std::toupper(static_cast<unsigned char>(c)) - 'X');
        if (var >= nvars_) throw error(std::string("variable ") + variable_name(var) + " not in this ring");
        ++pos_;
        long power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          power = integer();
        }
        e[var] += power;
      } else if (c == '*') {
        ++pos_;
      } else {
        throw error(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip_space();
    }
    if (!any) throw error("empty term");
    return Polynomial::monomial(nvars_, e, coeff);
  }

  Rational number() {
    const size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  long integer() {
    const size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw error("expected an exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial '" + std::string(s_) + "': " + what);
  }

  std::string_view s_;
  size_t nvars_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, size_t nvars) { return TermParser(text, nvars).parse(); }

std::vector<long> FlagOrder::key(const Exponent& e) const {
  std::vector<long> k;
  k.reserve(key_vars.size());
  for (size_t v : key_vars) k.push_back(e[v]);
  return k;
}

MonomialBasis::MonomialBasis(size_t nvars, long degree, FlagOrder order)
    : nvars_(nvars), degree_(degree), order_(std::move(order)) {
  if (nvars != 2 && nvars != 3) throw std::invalid_argument("monomial bases need 2 or 3 variables");
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (nvars == 2) {
    for (long a = 0; a <= degree; ++a) monomials_.push_back({a, degree - a, 0});
  } else {
    for (long a = 0; a <= degree; ++a)
      for (long b = 0; a + b <= degree; ++b) monomials_.push_back({a, b, degree - a - b});
  }
  std::sort(monomials_.begin(), monomials_.end(), [&](const Exponent& x, const Exponent& y) {
    const auto kx = order_.key(x);
    const auto ky = order_.key(y);
    return kx != ky ? kx < ky : x < y;
  });
  for (size_t i = 0; i < monomials_.size(); ++i) {
    keys_.push_back(order_.key(monomials_[i]));
    index_.emplace(monomials_[i], i);
    key_index_.emplace(keys_.back(), i);
  }
}

std::optional<size_t> MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> MonomialBasis::index_of_key(const std::vector<long>& key) const {
  auto it = key_index_.find(key);
  if (it == key_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> MonomialBasis::coefficients(const Polynomial& p) const {
  std::vector<Rational> out(size());
  for (const auto& [e, c] : p.terms()) {
    auto idx = index_of(e);
    if (!idx) throw std::invalid_argument("polynomial " + p.str() + " is not of degree " + std::to_string(degree_));
    out[*idx] = c;
  }
  return out;
}

Polynomial MonomialBasis::polynomial(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != size()) throw std::invalid_argument("coefficient vector has the wrong length");
  Polynomial p(nvars_);
  for (size_t i = 0; i < size(); ++i)
    if (!coeffs[i].is_zero()) p += Polynomial::monomial(nvars_, monomials_[i], coeffs[i]);
  return p;
}

namespace {

Rational falling(long n, long k) {
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= Rational(n - i);
  return out;
}

void for_each_multi_index(size_t nvars, long order, const std::function<void(const Exponent&)>& fn) {
  Exponent a{};
  if (nvars == 2) {
    for (long i = 0; i <= order; ++i) {
      a = {i, order - i, 0};
      fn(a);
    }
  } else {
    for (long i = 0; i <= order; ++i)
      for (long j = 0; i + j <= order; ++j) {
        a = {i, j, order - i - j};
        fn(a);
      }
  }
}

}  // namespace

Matrix multiplicity_conditions(const MonomialBasis& basis, const Point& point, long m) {
  const size_t n = basis.size();
  if (point.size() != basis.nvars()) throw std::invalid_argument("point has the wrong number of coordinates");
  if (std::all_of(point.begin(), point.end(), [](const Rational& x) { return x.is_zero(); }))
    throw std::invalid_argument("the zero vector is not a projective point");
  if (m <= 0) return Matrix(0, n);
  if (m > basis.degree()) return Matrix::identity(n);

  const size_t nv = basis.nvars();
  const long deg = basis.degree();
  std::vector<std::vector<Rational>> powers(nv);
  for (size_t i = 0; i < nv; ++i) {
    powers[i].reserve(static_cast<size_t>(deg) + 1);
    powers[i].emplace_back(1);
    for (long e = 1; e <= deg; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  std::vector<std::vector<Rational>> fall(static_cast<size_t>(deg) + 1);
  for (long e = 0; e <= deg; ++e)
    for (long a = 0; a <= std::min(e, m - 1); ++a) fall[e].push_back(falling(e, a));

  std::vector<std::vector<Rational>> rows;
  for_each_multi_index(nv, m - 1, [&](const Exponent& alpha) {
    std::vector<Rational> row(n);
    for (size_t j = 0; j < n; ++j) {
      const Exponent& e = basis[j];
      bool zero = false;
      for (size_t i = 0; i < nv && !zero; ++i)
        zero = e[i] < alpha[i] || (point[i].is_zero() && e[i] != alpha[i]);
      if (zero) continue;
      Rational v(1);
      for (size_t i = 0; i < nv; ++i) v *= fall[e[i]][alpha[i]] * powers[i][e[i] - alpha[i]];
      row[j] = std::move(v);
    }
    rows.push_back(std::move(row));
  });
  return Matrix(std::move(rows), n);
}

Matrix divisibility_conditions(const MonomialBasis& basis, const Polynomial& g, long t) {
  const size_t n = basis.size();
  if (t <= 0) return Matrix(0, n);
  const long dg = g.degree();
  if (dg == 0) return Matrix(0, n);
  const long rest = basis.degree() - t * dg;
  if (rest < 0) return Matrix::identity(n);

  const Polynomial gt = g.pow(static_cast<unsigned>(t));
  if (gt.is_monomial()) {
    const Exponent& ge = gt.terms().begin()->first;
    std::vector<std::vector<Rational>> rows;
    for (size_t j = 0; j < n; ++j) {
      const Exponent& e = basis[j];
      if (e[0] < ge[0] || e[1] < ge[1] || e[2] < ge[2]) {
        std::vector<Rational> row(n);
        row[j] = 1;
        rows.push_back(std::move(row));
      }
    }
    return Matrix(std::move(rows), n);
  }

  // Annihilator of the image of multiplication by g^t.
  const MonomialBasis cofactors(basis.nvars(), rest, basis.order());
  std::vector<std::vector<Rational>> image;
  for (size_t i = 0; i < cofactors.size(); ++i)
    image.push_back(basis.coefficients(gt * Polynomial::monomial(basis.nvars(), cofactors[i])));
  return Matrix(kernel_basis(Matrix(std::move(image), n)), n);
}

long multiplicity_at(const Polynomial& f, const Point& point) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial");
  const MonomialBasis basis(f.nvars(), f.degree(), FlagOrder{{0}});
  const auto coeffs = basis.coefficients(f);
  for (long m = 0; m <= basis.degree(); ++m) {
    const auto values = multiplicity_conditions(basis, point, m + 1).apply(coeffs);
    if (std::any_of(values.begin(), values.end(), [](const Rational& v) { return !v.is_zero(); })) return m;
  }
  return basis.degree();
}

}  // namespace okb
