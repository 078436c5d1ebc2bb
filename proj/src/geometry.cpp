#include "isosum/geometry.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace isosum {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::NotConcave: return "NotConcave";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::OutsideRegion: return "OutsideRegion";
        case ErrorKind::CVSRegion: return "CVSRegion";
        case ErrorKind::NoInteriorEdge: return "NoInteriorEdge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw Error(ErrorKind::DegenerateInput,
                    fmt::format("polygon needs at least 3 vertices, got {}", vertices_.size()));
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!is_finite(vertices_[i])) {
            throw Error(ErrorKind::DegenerateInput, fmt::format("vertex {} is not finite", i));
        }
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % vertices_.size()];
        if (distance(a, b) <= kTol) {
            throw Error(ErrorKind::DegenerateInput,
                        fmt::format("vertices {} and {} coincide", i, (i + 1) % vertices_.size()));
        }
    }
}

double signed_area(const Polygon& polygon) {
    double twice = 0.0;
    const auto n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        twice += cross(polygon[i], polygon[(i + 1) % n]);
    }
    return 0.5 * twice;
}

double area(const Polygon& polygon) { return std::abs(signed_area(polygon)); }

double perimeter(const Polygon& polygon) {
    double total = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto [a, b] = polygon.edge(i);
        total += distance(a, b);
    }
    return total;
}

Point2 centroid(const Polygon& polygon) {
    // Shift to the first vertex to keep the cross products small.
    const Point2 origin = polygon[0];
    double twice_area = 0.0;
    Vec2 acc;
    for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
        const Vec2 a = polygon[i] - origin;
        const Vec2 b = polygon[i + 1] - origin;
        const double c = cross(a, b);
        twice_area += c;
        acc += c * (a + b);
    }
    if (twice_area == 0.0) return vertex_centroid(polygon);
    return origin + acc / (3.0 * twice_area);
}

Point2 vertex_centroid(const Polygon& polygon) {
    Vec2 sum;
    for (const auto& v : polygon.vertices()) sum += v;
    return sum / static_cast<double>(polygon.size());
}

BoundingBox2 bounding_box(const Polygon& polygon) {
    BoundingBox2 box{polygon[0], polygon[0]};
    for (const auto& v : polygon.vertices()) {
        box.min.x = std::min(box.min.x, v.x);
        box.min.y = std::min(box.min.y, v.y);
        box.max.x = std::max(box.max.x, v.x);
        box.max.y = std::max(box.max.y, v.y);
    }
    return box;
}

namespace {

int orientation_sign(Point2 a, Point2 b, Point2 c, double tol) {
    const Vec2 u = b - a;
    const Vec2 v = c - a;
    const double scale = std::max(norm(u) * norm(v), std::numeric_limits<double>::min());
    const double s = cross(u, v) / scale;
    if (s > tol) return 1;
    if (s < -tol) return -1;
    return 0;
}

bool on_segment(Point2 p, Point2 a, Point2 b, double tol) {
    return point_segment_distance(p, a, b) <= tol;
}

bool segments_touch(Point2 a, Point2 b, Point2 c, Point2 d, double tol) {
    const int o1 = orientation_sign(a, b, c, tol);
    const int o2 = orientation_sign(a, b, d, tol);
    const int o3 = orientation_sign(c, d, a, tol);
    const int o4 = orientation_sign(c, d, b, tol);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(c, a, b, tol) || on_segment(d, a, b, tol) ||
           on_segment(a, c, d, tol) || on_segment(b, c, d, tol);
}

}  // namespace

bool is_simple(const Polygon& polygon) {
    const auto n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = polygon.edge(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto [c, d] = polygon.edge(j);
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Neighbours share one endpoint; they must not fold back onto each other.
                const Point2 shared = (j == i + 1) ? b : a;
                const Point2 p = (j == i + 1) ? a : b;
                const Point2 q = (j == i + 1) ? d : c;
                if (orientation_sign(shared, p, q, kTol) == 0 && dot(p - shared, q - shared) > 0.0) {
                    return false;
                }
                continue;
            }
            if (segments_touch(a, b, c, d, kTol)) return false;
        }
    }
    return true;
}

Polygon orient_ccw(const Polygon& polygon) {
    const double a = signed_area(polygon);
    const double diag = bounding_box(polygon).diagonal();
    if (std::abs(a) <= kTol * diag * diag) {
        throw Error(ErrorKind::DegenerateInput, "polygon has zero signed area");
    }
    if (a > 0.0) return polygon;
    std::vector<Point2> reversed(polygon.vertices().rbegin(), polygon.vertices().rend());
    // Keep the first vertex first so the flip is a pure order reversal.
    std::rotate(reversed.begin(), reversed.end() - 1, reversed.end());
    return Polygon(std::move(reversed));
}

Polygon normalize(const Polygon& polygon, std::vector<std::string>* warnings) {
    std::vector<Point2> v = polygon.vertices();
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2 prev = v[(i + v.size() - 1) % v.size()];
            const Point2 cur = v[i];
            const Point2 next = v[(i + 1) % v.size()];
            if (orientation_sign(prev, cur, next, kTol) != 0) continue;
            if (dot(cur - prev, next - cur) < 0.0) {
                throw Error(ErrorKind::DegenerateInput,
                            fmt::format("polygon folds back on itself at ({}, {})", cur.x, cur.y));
            }
            if (warnings) {
                warnings->push_back(
                    fmt::format("merged collinear vertex ({}, {})", cur.x, cur.y));
            }
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
    if (v.size() < 3) {
        throw Error(ErrorKind::DegenerateInput, "all vertices are collinear");
    }
    Polygon merged(std::move(v));
    if (!is_simple(merged)) {
        throw Error(ErrorKind::DegenerateInput, "polygon is self-intersecting");
    }
    return orient_ccw(merged);
}

ConvexityReport is_convex(const Polygon& polygon) {
    ConvexityReport report;
    const double a = signed_area(polygon);
    const double diag = bounding_box(polygon).diagonal();
    if (std::abs(a) <= kTol * diag * diag || !is_simple(polygon)) {
        report.verdict = Convexity::Degenerate;
        return report;
    }
    const double orientation = a > 0.0 ? 1.0 : -1.0;
    const auto n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = polygon.vertex(i + n - 1);
        const Point2 next = polygon.vertex(i + 1);
        if (orientation * orientation_sign(prev, polygon[i], next, kTol) < 0) {
            report.reflex_vertex_indices.push_back(i);
        }
    }
    report.verdict = report.reflex_vertex_indices.empty() ? Convexity::Convex : Convexity::Concave;
    return report;
}

BoundaryLine carrier_line(Point2 a, Point2 b) {
    const Vec2 d = b - a;
    const double len = norm(d);
    if (len <= kTol) throw Error(ErrorKind::DegenerateInput, "line through coincident points");
    BoundaryLine line;
    line.alpha = -d.y / len;
    line.beta = d.x / len;
    line.gamma = -(line.alpha * a.x + line.beta * a.y);
    bool flip = false;
    if (std::abs(line.gamma) > kTol) {
        flip = line.gamma > 0.0;
    } else {
        line.gamma = 0.0;
        flip = std::abs(line.alpha) > kTol ? line.alpha < 0.0 : line.beta < 0.0;
    }
    if (flip) {
        line.alpha = -line.alpha;
        line.beta = -line.beta;
        line.gamma = -line.gamma;
    }
    // Normalize away negative zeros so printed coefficients are stable.
    line.alpha += 0.0;
    line.beta += 0.0;
    line.gamma += 0.0;
    line.epsilon = 1;
    return line;
}

BoundaryLine anchored(BoundaryLine line, Point2 inside) {
    line.epsilon = line.eval(inside) >= 0.0 ? 1 : -1;
    return line;
}

bool same_line(const BoundaryLine& a, const BoundaryLine& b, double tol) {
    return std::abs(a.alpha - b.alpha) <= tol && std::abs(a.beta - b.beta) <= tol &&
           std::abs(a.gamma - b.gamma) <= tol;
}

BoundaryLine boundary_line_of_edge(const Polygon& polygon, std::size_t edge_index) {
    if (edge_index >= polygon.size()) {
        throw Error(ErrorKind::ValidationError, fmt::format("edge index {} out of range", edge_index));
    }
    const auto report = is_convex(polygon);
    if (report.verdict == Convexity::Degenerate) {
        throw Error(ErrorKind::DegenerateInput, "degenerate polygon");
    }
    if (report.verdict != Convexity::Convex) {
        throw Error(ErrorKind::NotConvex, "inward side of an edge is undefined for a concave polygon");
    }
    const auto [a, b] = polygon.edge(edge_index);
    return anchored(carrier_line(a, b), centroid(polygon));
}

double signed_inward_distance(const BoundaryLine& line, Point2 p) {
    return line.epsilon * line.eval(p);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Vec2 d = b - a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    return distance(p, a + t * d);
}

double point_line_distance(Point2 p, Point2 a, Point2 b) {
    const Vec2 d = b - a;
    return std::abs(cross(d, p - a)) / norm(d);
}

Location contains(const Polygon& polygon, Point2 p, double tol) {
    const auto n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = polygon.edge(i);
        if (point_segment_distance(p, a, b) <= tol) return Location::OnBoundary;
    }
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& a = polygon[i];
        const Point2& b = polygon[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

std::string to_string(Convexity verdict) {
    switch (verdict) {
        case Convexity::Convex: return "Convex";
        case Convexity::Concave: return "Concave";
        case Convexity::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

std::string to_string(Location location) {
    switch (location) {
        case Location::Inside: return "Inside";
        case Location::OnBoundary: return "OnBoundary";
        case Location::Outside: return "Outside";
    }
    return "Unknown";
}

}  // namespace isosum
