#include "isosum/lp.hpp"

#include "isosum/error.hpp"
#include "isosum/functional.hpp"

#include <charconv>
#include <regex>
#include <sstream>

#include <fmt/format.h>

namespace isosum {

double LPProblem::objective_value(const std::array<double, 3>& x) const {
    return side_lengths[0] * x[0] + side_lengths[1] * x[1] + side_lengths[2] * x[2];
}

LPProblem triangle_to_lp(const Polygon& triangle) {
    if (triangle.size() != 3) {
        throw Error(ErrorKind::DegenerateInput, fmt::format("expected a triangle, got {} vertices", triangle.size()));
    }
    const Point2 a = triangle[0];
    const Point2 b = triangle[1];
    const Point2 c = triangle[2];
    LPProblem lp;
    lp.side_lengths = {distance(b, c), distance(a, c), distance(a, b)};
    lp.area = area(triangle);
    const double diag = bounding_box(triangle).diagonal();
    const auto& s = lp.side_lengths;
    const bool strict = s[0] < s[1] + s[2] && s[1] < s[0] + s[2] && s[2] < s[0] + s[1];
    if (!strict || lp.area <= kTol * diag * diag) {
        throw Error(ErrorKind::DegenerateInput, "triangle vertices are collinear");
    }
    return lp;
}

SimplexPoint barycentric_normalize(const Polygon& triangle, Point2 p) {
    triangle_to_lp(triangle);
    const auto profile = distance_profile(triangle, p);
    // Edge i of the polygon runs from vertex i to i+1: AB, BC, CA.
    const std::array<double, 3> h = {profile.distances[1], profile.distances[2], profile.distances[0]};
    return {{h[0] / profile.total, h[1] / profile.total, h[2] / profile.total}};
}

double check_duality(const Polygon& triangle, Point2 p) {
    const LPProblem lp = triangle_to_lp(triangle);
    const SimplexPoint x = barycentric_normalize(triangle, p);
    const double v = distance_profile(triangle, p).total;
    return std::abs(lp.objective_value(x.x) * v - 2.0 * lp.area);
}

std::string export_lp_text(const LPProblem& lp) {
    const auto& a = lp.side_lengths;
    std::string out;
    out += "\\ triangle distance-sum LP: a1 = |BC|, a2 = |AC|, a3 = |AB|\n";
    out += fmt::format("\\ area {:.12g}\n", lp.area);
    out += fmt::format("maximize obj: {:.12g} x1 + {:.12g} x2 + {:.12g} x3\n", a[0], a[1], a[2]);
    out += "subject to\n";
    out += " simplex: x1 + x2 + x3 <= 1\n";
    out += "bounds\n";
    out += " x1 >= 0\n";
    out += " x2 >= 0\n";
    out += " x3 >= 0\n";
    out += "end\n";
    return out;
}

namespace {

double parse_number(const std::string& token, std::size_t line) {
    double value = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::ParseError, fmt::format("line {}: bad number '{}'", line, token));
    }
    return value;
}

}  // namespace

LPProblem parse_lp_text(std::string_view text) {
    static const std::regex area_re(R"(^\\ area (\S+)$)");
    static const std::regex objective_re(R"(^maximize obj: (\S+) x1 \+ (\S+) x2 \+ (\S+) x3$)");
    LPProblem lp;
    bool have_area = false;
    bool have_objective = false;
    bool have_constraint = false;
    int bounds = 0;
    bool have_end = false;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::smatch m;
        if (std::regex_match(line, m, area_re)) {
            lp.area = parse_number(m[1], line_no);
            have_area = true;
        } else if (std::regex_match(line, m, objective_re)) {
            for (int i = 0; i < 3; ++i) lp.side_lengths[i] = parse_number(m[i + 1], line_no);
            have_objective = true;
        } else if (line == " simplex: x1 + x2 + x3 <= 1") {
            have_constraint = true;
        } else if (line == " x1 >= 0" || line == " x2 >= 0" || line == " x3 >= 0") {
            ++bounds;
        } else if (line == "end") {
            have_end = true;
        } else if (line.empty() || line.starts_with("\\") || line == "subject to" || line == "bounds") {
            continue;
        } else {
            throw Error(ErrorKind::ParseError, fmt::format("line {}: unexpected '{}'", line_no, line));
        }
    }
    if (!have_objective) throw Error(ErrorKind::ParseError, "missing objective line");
    if (!have_constraint) throw Error(ErrorKind::ParseError, "missing simplex constraint");
    if (bounds != 3) throw Error(ErrorKind::ParseError, "expected three nonnegativity bounds");
    if (!have_area) throw Error(ErrorKind::ParseError, "missing area comment");
    if (!have_end) throw Error(ErrorKind::ParseError, "missing end");
    return lp;
}

}  // namespace isosum
