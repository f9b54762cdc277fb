#include "okb/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace okb {

namespace {

std::vector<std::vector<BigInt>> hermite_rows(const std::vector<LatticePoint>& gens, size_t n) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& g : gens) {
    std::vector<BigInt> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = g[i];
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < rows.size(); ++c) {
    while (true) {
      size_t best = rows.size();
      for (size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[rank], rows[best]);
      bool done = true;
      for (size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[rank][c].get_mpz_t());
        for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[rank][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rank >= rows.size() || rows[rank][c] == 0) continue;
    if (rows[rank][c] < 0)
      for (auto& x : rows[rank]) x = -x;
    for (size_t i = 0; i < rank; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[rank][c].get_mpz_t());
      for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

Rational coordinate_sum(const Point& x) {
  Rational s;
  for (const auto& c : x) s += c;
  return s;
}

size_t box_size(const LatticePoint& upper) {
  size_t n = 1;
  for (long u : upper) n *= static_cast<size_t>(u + 1);
  return n;
}

LatticePoint unflatten(size_t index, const LatticePoint& upper) {
  LatticePoint x(upper.size());
  for (size_t i = upper.size(); i-- > 0;) {
    const size_t radix = static_cast<size_t>(upper[i] + 1);
    x[i] = static_cast<long>(index % radix);
    index /= radix;
  }
  return x;
}

size_t flatten(const LatticePoint& x, const LatticePoint& upper) {
  size_t index = 0;
  for (size_t i = 0; i < upper.size(); ++i) index = index * static_cast<size_t>(upper[i] + 1) + static_cast<size_t>(x[i]);
  return index;
}

}  // namespace

Point to_point(const LatticePoint& x) {
  Point p;
  p.reserve(x.size());
  for (long v : x) p.emplace_back(v);
  return p;
}

DiscreteSemigroup::DiscreteSemigroup(std::vector<LatticePoint> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("semigroup needs at least one generator");
  dim_ = generators_.front().size();
  if (dim_ < 1 || dim_ > 3) throw std::invalid_argument("semigroups in Z^1, Z^2 or Z^3 only");
  std::vector<Point> base;
  for (const auto& g : generators_) {
    if (g.size() != dim_) throw std::invalid_argument("generators of mixed dimension");
    if (std::any_of(g.begin(), g.end(), [](long v) { return v < 0; }) ||
        std::all_of(g.begin(), g.end(), [](long v) { return v == 0; }))
      throw std::invalid_argument("generators must be non-negative and nonzero");
    Point p = to_point(g);
    const Rational s = coordinate_sum(p);
    base.push_back(s.inverse() * p);
  }
  hnf_ = hermite_rows(generators_, dim_);
  base_ = Polytope::hull(std::move(base), dim_);
}

bool DiscreteSemigroup::in_group(const LatticePoint& x) const {
  if (x.size() != dim_) throw std::invalid_argument("point has the wrong dimension");
  std::vector<BigInt> r(x.begin(), x.end());
  for (const auto& row : hnf_) {
    size_t p = 0;
    while (row[p] == 0) ++p;
    if (r[p] % row[p] != 0) return false;
    const BigInt q = r[p] / row[p];
    for (size_t j = 0; j < dim_; ++j) r[j] -= q * row[j];
  }
  return std::all_of(r.begin(), r.end(), [](const BigInt& v) { return v == 0; });
}

bool DiscreteSemigroup::in_cone(const Point& x) const {
  if (x.size() != dim_) throw std::invalid_argument("point has the wrong dimension");
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.is_zero(); })) return true;
  if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() < 0; })) return false;
  return base_.contains(coordinate_sum(x).inverse() * x);
}

bool DiscreteSemigroup::in_open_cone(const Point& x) const {
  if (!in_cone(x)) return false;
  const Rational s = coordinate_sum(x);
  if (s.is_zero()) return false;
  const Point y = s.inverse() * x;
  return std::all_of(base_.facets().begin(), base_.facets().end(),
                     [&](const Halfspace& f) { return f.slack(y).sign() > 0; });
}

std::vector<bool> DiscreteSemigroup::reachable(const LatticePoint& upper) const {
  if (upper.size() != dim_) throw std::invalid_argument("box has the wrong dimension");
  if (std::any_of(upper.begin(), upper.end(), [](long u) { return u < 0; })) return {};
  const size_t total = box_size(upper);
  std::vector<bool> ok(total, false);
  ok[0] = true;
  for (size_t idx = 1; idx < total; ++idx) {
    const LatticePoint x = unflatten(idx, upper);
    for (const auto& g : generators_) {
      LatticePoint y(dim_);
      bool inside = true;
      for (size_t i = 0; i < dim_ && inside; ++i) {
        y[i] = x[i] - g[i];
        inside = y[i] >= 0;
      }
      if (inside && ok[flatten(y, upper)]) {
        ok[idx] = true;
        break;
      }
    }
  }
  return ok;
}

bool DiscreteSemigroup::contains(const LatticePoint& x) const {
  const auto ok = reachable(x);
  return !ok.empty() && ok.back();
}

std::vector<LatticePoint> DiscreteSemigroup::members(const LatticePoint& upper) const {
  const auto ok = reachable(upper);
  std::vector<LatticePoint> out;
  for (size_t i = 0; i < ok.size(); ++i)
    if (ok[i]) out.push_back(unflatten(i, upper));
  return out;
}

bool regularization_membership(const DiscreteSemigroup& s, const LatticePoint& x) {
  return s.in_group(x) && s.in_cone(to_point(x));
}

namespace {

std::vector<LatticePoint> gaps_in(const DiscreteSemigroup& s, const LatticePoint& box) {
  std::vector<LatticePoint> gaps;
  const auto members = s.members(box);
  size_t m = 0;
  const size_t total = box_size(box);
  for (size_t idx = 0; idx < total; ++idx) {
    const LatticePoint x = unflatten(idx, box);
    if (m < members.size() && members[m] == x) {
      ++m;
      continue;
    }
    if (regularization_membership(s, x)) gaps.push_back(x);
  }
  return gaps;
}

}  // namespace

GapReport gordan_gap(const DiscreteSemigroup& s, const LatticePoint& box) {
  if (box.size() != s.dim()) throw std::invalid_argument("box has the wrong dimension");
  GapReport out;
  out.box = box;
  out.gaps = gaps_in(s, box);
  LatticePoint doubled = box;
  for (auto& b : doubled) b *= 2;
  const auto wider = gaps_in(s, doubled);
  out.stable = wider.size() == out.gaps.size();
  return out;
}

void check_subadditive(const DiscreteSemigroup& s, const LatticeFunction& f, const LatticePoint& box, size_t cases,
                       std::uint64_t seed) {
  const auto members = s.members(box);
  if (members.empty()) return;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, members.size() - 1);
  for (size_t c = 0; c < cases; ++c) {
    const LatticePoint& u = members[pick(rng)];
    const LatticePoint& v = members[pick(rng)];
    LatticePoint w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    const Rational lhs = f(w);
    const Rational rhs = f(u) + f(v);
    if (lhs > rhs)
      throw SubadditivityViolation(u, v, "subadditivity violated: f(" + to_string(to_point(w)) + ") = " + lhs.str() +
                                             " > f(u) + f(v) = " + rhs.str() + " for u = " + to_string(to_point(u)) +
                                             ", v = " + to_string(to_point(v)));
  }
}

std::vector<ScheduleStep> ray_schedule(const Point& x, long steps) {
  std::vector<ScheduleStep> out;
  for (long k = 1; k <= steps; ++k) {
    LatticePoint u;
    for (const auto& c : x) u.push_back((Rational(k) * c).floor().get_si());
    out.push_back({Rational(1, k), std::move(u)});
  }
  return out;
}

HatfEstimate hatf_estimate(const DiscreteSemigroup& s, const LatticeFunction& f, const Point& x,
                           const std::vector<ScheduleStep>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  if (!s.in_open_cone(x)) throw std::invalid_argument("x = " + to_string(x) + " is not in the open cone");
  std::vector<Rational> values;
  for (const auto& step : schedule) {
    if (step.epsilon.sign() <= 0) throw std::invalid_argument("schedule step sizes must be positive");
    if (!s.in_open_cone(to_point(step.u)))
      throw std::invalid_argument("schedule point " + to_string(to_point(step.u)) + " leaves the open cone");
    if (!s.contains(step.u)) throw std::invalid_argument("schedule point " + to_string(to_point(step.u)) + " is not in S");
    values.push_back(step.epsilon * f(step.u));
  }
  HatfEstimate out;
  out.estimate = values.back();
  out.lo = out.hi = values.back();
  for (size_t i = values.size() / 2; i < values.size(); ++i) {
    out.lo = min(out.lo, values[i]);
    out.hi = max(out.hi, values[i]);
  }
  return out;
}

LatticeFunction builtin_function(const std::string& name, const std::vector<Rational>& params) {
  if (name == "linear") {
    return [params](const LatticePoint& u) {
      if (params.size() != u.size()) throw std::invalid_argument("linear: one coefficient per coordinate");
      Rational s;
      for (size_t i = 0; i < u.size(); ++i) s += params[i] * Rational(u[i]);
      return s;
    };
  }
  if (name == "ceil-norm") {
    return [](const LatticePoint& u) {
      BigInt sq = 0;
      for (long v : u) sq += BigInt(v) * v;
      BigInt r = isqrt(sq);
      if (r * r < sq) r += 1;
      return Rational(r);
    };
  }
  if (name == "ceil-multiple" || name == "floor-multiple") {
    if (params.size() != 1) throw std::invalid_argument(name + " takes one rational parameter");
    const Rational c = params.front();
    const bool up = name == "ceil-multiple";
    return [c, up](const LatticePoint& u) {
      if (u.size() != 1) throw std::invalid_argument("multiple functions live on N");
      const Rational v = c * Rational(u.front());
      return Rational(up ? v.ceil() : v.floor());
    };
  }
  throw std::invalid_argument("unknown built-in function '" + name + "' (linear, ceil-norm, ceil-multiple, floor-multiple)");
}

LatticeFunction negated(LatticeFunction f) {
  return [f = std::move(f)](const LatticePoint& u) { return -f(u); };
}

}  // namespace okb
