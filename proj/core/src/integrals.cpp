#include "okb/integrals.hpp"

#include <stdexcept>

#include "okb/filtration.hpp"
#include "okb/okounkov_function.hpp"

namespace okb {

std::vector<std::pair<long, Rational>> mass_sequence(const SeriesFamily& family, const ValuationSpec& val, long from,
                                                     long to) {
  std::vector<std::pair<long, Rational>> out;
  const unsigned power = static_cast<unsigned>(family.geometry().rank() + 1);
  for (long k : family.levels(to)) {
    if (k < from) continue;
    const LinearSeries v = family.level(k);
    if (v.dim() == 0) continue;
    out.emplace_back(k, jumping_numbers(v, val).mass / pow(Rational(k), power));
  }
  return out;
}

IntegralReport integral(const ConcavePL& f) {
  IntegralReport out;
  out.integral = integrate(f);
  out.body_volume = f.domain().volume();
  if (!out.body_volume.is_zero()) out.normalized = out.integral / out.body_volume;
  return out;
}

IntegralReport integral(const SeriesFamily& family, const ValuationSpec& val, long max_level) {
  IntegralReport out = integral(okounkov_function_envelope(family, val, max_level).function);
  out.mass_sequence = mass_sequence(family, val, 1, max_level);
  out.max_level = max_level;
  return out;
}

HomogeneityComparison check_integral_homogeneity(const SeriesFamily& family, const ValuationSpec& val, long m,
                                                 long max_level) {
  if (m < 1) throw std::invalid_argument("homogeneity factor must be positive");
  HomogeneityComparison out;
  out.base = integrate(okounkov_function_envelope(family, val, max_level).function);
  out.scaled = integrate(okounkov_function_envelope(family.veronese(m), val, max_level).function);
  out.expected = pow(Rational(m), static_cast<unsigned>(family.geometry().rank() + 1)) * out.base;
  return out;
}

std::vector<ScanEntry> family_scan(const FamilySpec& spec, const std::vector<Rational>& lambda_grid, long max_level) {
  std::vector<ScanEntry> out;
  for (const auto& lambda : lambda_grid) {
    ScanEntry e;
    e.lambda = lambda;
    std::optional<FamilyMember> member;
    try {
      member = spec.member(lambda);
    } catch (const std::invalid_argument& err) {
      e.flagged = true;
      e.reason = err.what();
    }
    if (member && !member->family.divisor().big()) {
      e.flagged = true;
      e.reason = "outside the bigness window: " + member->family.divisor().str() + " is not big";
    }
    if (e.flagged) {
      out.push_back(std::move(e));
      continue;
    }
    if (spec.closed_form) {
      if (auto f = spec.closed_form(lambda)) e.closed_form = integrate(*f);
    }
    if (member->family.step() <= max_level) e.truncated = integral(member->family, member->valuation, max_level);
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Rational> observed_lipschitz(const std::vector<ScanEntry>& scan) {
  std::optional<Rational> best;
  const ScanEntry* prev = nullptr;
  for (const auto& e : scan) {
    if (e.flagged || !e.closed_form) continue;
    if (prev != nullptr && e.lambda != prev->lambda) {
      const Rational slope = ((*e.closed_form - *prev->closed_form) / (e.lambda - prev->lambda)).abs();
      best = best ? max(*best, slope) : slope;
    }
    prev = &e;
  }
  return best;
}

}  // namespace okb
