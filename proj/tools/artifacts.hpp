#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "okb/boundary.hpp"
#include "okb/fekete.hpp"
#include "okb/filtration.hpp"
#include "okb/geometry.hpp"
#include "okb/integrals.hpp"
#include "okb/okounkov_function.hpp"
#include "okb/semigroup.hpp"

namespace okb::io {

using nlohmann::ordered_json;

ordered_json to_json(const Rational& r);
ordered_json to_json(const Point& p);
ordered_json to_json(const std::vector<Point>& pts);
ordered_json to_json(const Polytope& p);
ordered_json to_json(const ConcavePL& f);
ordered_json to_json(const Enclosure& e);
ordered_json to_json(const FeketeResult& f);
ordered_json to_json(const JumpingProfile& j);
ordered_json to_json(const IntegralReport& r);
ordered_json to_json(const WitnessReport& w);
ordered_json to_json(const IdentityReport& r);
ordered_json to_json(const LatticePoint& x);

/// lambda,flagged,reason,closed_form,truncated,normalized,mass_tail
std::string scan_csv(const std::vector<ScanEntry>& scan);

/// Presentation-only drawings.
std::string polytope_svg(const Polytope& body, const std::vector<Point>& marks = {});
std::string function_svg(const ConcavePL& f);
std::string witness_svg(const Body& body, const Point& center, const WitnessReport& w);

}  // namespace okb::io
