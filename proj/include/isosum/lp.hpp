#pragma once

#include "isosum/geometry.hpp"

#include <array>
#include <string>
#include <string_view>

namespace isosum {

/// Triangle ABC as a linear program: maximize sum(a_i x_i) subject to
/// x1 + x2 + x3 <= 1 and x_i >= 0, where a1 = |BC|, a2 = |AC|, a3 = |AB|
/// (a_i is the side opposite the i-th vertex). The objective coefficients
/// are the side lengths themselves.
struct LPProblem {
    std::array<double, 3> side_lengths{};
    double area = 0.0;

    const std::array<double, 3>& objective() const { return side_lengths; }
    double objective_value(const std::array<double, 3>& x) const;

    friend bool operator==(const LPProblem&, const LPProblem&) = default;
};

/// x_i = h_i / (h1 + h2 + h3), h_i the distance to the side opposite vertex i.
struct SimplexPoint {
    std::array<double, 3> x{};
};

LPProblem triangle_to_lp(const Polygon& triangle);
SimplexPoint barycentric_normalize(const Polygon& triangle, Point2 p);
/// |F(x) * V(p) - 2S| for x = barycentric_normalize(p).
double check_duality(const Polygon& triangle, Point2 p);

/// Plain-text LP listing (LF line ends, ASCII, 12 significant digits).
std::string export_lp_text(const LPProblem& lp);
/// Reads text produced by export_lp_text. Throws ParseError.
LPProblem parse_lp_text(std::string_view text);

}  // namespace isosum
