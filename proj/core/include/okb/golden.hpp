#pragma once

#include <vector>

#include "okb/geometry.hpp"
#include "okb/integrals.hpp"

namespace okb::golden {

/// Unit triangle (0,0), (1,0), (0,1): the body of O(1) on P2.
Polytope unit_triangle();

/// {0 <= a <= 1 - lambda, 0 <= b <= 1 - a}: the body of H - lambda E1.
Polytope blowup_body(const Rational& lambda);

/// phi = a + b: order at the flag point P0.
ConcavePL p2_order_at_flag_point();
/// phi = 1 - a: order at a point off the flag line.
ConcavePL p2_order_off_line();
/// phi = a + b on the body of H - lambda E1.
ConcavePL blowup_order_at_flag_point(const Rational& lambda);
/// phi = 1 - a on {a + b <= 1 - lambda}, 2 - 2a - b - lambda above it: order
/// at a point off E1 and off the line through P0 and P1.
ConcavePL blowup_order_off_lines(const Rational& lambda);
/// x on [0, deg]: order at the flag point of a curve.
ConcavePL curve_order_at_flag_point(const Rational& degree);
/// deg - x on [0, deg]: order at another point.
ConcavePL curve_order_elsewhere(const Rational& degree);

/// 1/3 - lambda^2/2 + lambda^3/6.
Rational blowup_integral(const Rational& lambda);

/// The family lambda -> (H - lambda E1, ord at P2 generic) with its known
/// function.
FamilySpec blowup_family();

/// Same function values and same affine pieces on the same domain.
bool same_function(const ConcavePL& a, const ConcavePL& b);

}  // namespace okb::golden
