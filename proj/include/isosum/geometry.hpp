#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace isosum {

/// Absolute tolerance for predicates on unit-normal quantities.
inline constexpr double kTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    Vec2& operator+=(Vec2 b) { x += b.x; y += b.y; return *this; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

using Point2 = Vec2;

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
/// Counter-clockwise quarter turn.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

struct BoundingBox2 {
    Point2 min;
    Point2 max;

    double diagonal() const { return distance(min, max); }
};

/// Simple polygon, closed implicitly. Construction checks only the cheap
/// invariants (vertex count, finiteness, distinct neighbours); use
/// normalize() for the full load-time treatment.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point2& operator[](std::size_t i) const { return vertices_[i]; }
    const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    /// Edge i runs from vertex i to vertex i+1.
    std::pair<Point2, Point2> edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point2> vertices_;
};

double signed_area(const Polygon& polygon);
double area(const Polygon& polygon);
double perimeter(const Polygon& polygon);
/// Area centroid; strictly interior for convex polygons.
Point2 centroid(const Polygon& polygon);
Point2 vertex_centroid(const Polygon& polygon);
BoundingBox2 bounding_box(const Polygon& polygon);
bool is_simple(const Polygon& polygon);

template <class F>
Polygon transformed(const Polygon& polygon, F&& map) {
    std::vector<Point2> out;
    out.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) out.push_back(map(v));
    return Polygon(std::move(out));
}

Polygon orient_ccw(const Polygon& polygon);

/// Merges collinear consecutive vertices (one warning each), rejects
/// self-intersections and orients counter-clockwise.
Polygon normalize(const Polygon& polygon, std::vector<std::string>* warnings = nullptr);

enum class Convexity { Convex, Concave, Degenerate };

struct ConvexityReport {
    Convexity verdict = Convexity::Degenerate;
    std::vector<std::size_t> reflex_vertex_indices;
};

ConvexityReport is_convex(const Polygon& polygon);

/// Oriented carrier of a side: alpha*x + beta*y + gamma = 0 with unit
/// (alpha, beta). epsilon makes epsilon*(alpha*x + beta*y + gamma) the inward
/// distance. Coefficients are stored in canonical sign: gamma < 0, or when
/// the line passes through the origin the first nonzero of (alpha, beta) is
/// positive.
struct BoundaryLine {
    double alpha = 0.0;
    double beta = 1.0;
    double gamma = 0.0;
    int epsilon = 1;

    Vec2 normal() const { return {alpha, beta}; }
    double eval(Point2 p) const { return alpha * p.x + beta * p.y + gamma; }
};

/// Canonical line through two distinct points, epsilon = +1.
BoundaryLine carrier_line(Point2 a, Point2 b);
/// Same line with epsilon chosen so the inward distance at `inside` is >= 0.
BoundaryLine anchored(BoundaryLine line, Point2 inside);
/// True when both lines are the same set of points (within tolerance).
bool same_line(const BoundaryLine& a, const BoundaryLine& b, double tol = kTol);

/// Carrier of edge i, epsilon anchored at the area centroid. Throws NotConvex
/// for concave input.
BoundaryLine boundary_line_of_edge(const Polygon& polygon, std::size_t edge_index);

double signed_inward_distance(const BoundaryLine& line, Point2 p);

double point_segment_distance(Point2 p, Point2 a, Point2 b);
/// Unsigned distance from p to the infinite line through a and b.
double point_line_distance(Point2 p, Point2 a, Point2 b);

enum class Location { Inside, OnBoundary, Outside };

Location contains(const Polygon& polygon, Point2 p, double tol = kTol);

std::string to_string(Convexity verdict);
std::string to_string(Location location);

}  // namespace isosum
