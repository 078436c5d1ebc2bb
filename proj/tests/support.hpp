#pragma once

#include "isosum/geometry.hpp"
#include "isosum/polyhedron.hpp"
#include "isosum/scene.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace isosum::test {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(ISOSUM_FIXTURE_DIR) / name;
}

inline Polygon fixture_polygon(const std::string& name) { return *load_scene(fixture(name)).polygon; }

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Convex polygon with vertices on a circle at sorted random angles; adjacent
/// angles are at least 0.2 rad apart so no side is tiny.
inline Polygon random_convex_polygon(Rng& rng, int n) {
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> angles;
    while (true) {
        angles.clear();
        for (int i = 0; i < n; ++i) angles.push_back(uniform(rng, 0.0, two_pi));
        std::sort(angles.begin(), angles.end());
        bool spread = two_pi - angles.back() + angles.front() > 0.2;
        for (int i = 1; i < n; ++i) spread = spread && angles[i] - angles[i - 1] > 0.2;
        if (spread) break;
    }
    const Point2 c{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
    const double r = uniform(rng, 0.5, 4.0);
    std::vector<Point2> v;
    for (double a : angles) v.push_back(c + r * Vec2{std::cos(a), std::sin(a)});
    return Polygon(std::move(v));
}

/// x -> R(theta) * s * x + t
struct Similarity {
    double theta = 0.0;
    double scale = 1.0;
    Vec2 shift;

    Point2 operator()(Point2 p) const {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return shift + scale * Vec2{c * p.x - s * p.y, s * p.x + c * p.y};
    }
    Vec2 rotate(Vec2 v) const {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return {c * v.x - s * v.y, s * v.x + c * v.y};
    }
};

inline Similarity random_similarity(Rng& rng, bool scaled) {
    return {uniform(rng, 0.0, 2.0 * std::numbers::pi), scaled ? uniform(rng, 0.25, 4.0) : 1.0,
            {uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)}};
}

/// Angle between two undirected directions, in [0, pi/2].
inline double line_angle(Vec2 a, Vec2 b) {
    const double c = std::abs(dot(a, b)) / (norm(a) * norm(b));
    const double s = std::abs(cross(a, b)) / (norm(a) * norm(b));
    return std::atan2(s, c);
}

/// Brute-force distance sum: every side is a segment between two vertices,
/// and the distance to its carrier line is |cross| / length.
inline double brute_distance_sum(const Polygon& polygon, Point2 p) {
    double total = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Point2 a = polygon.vertex(i);
        const Point2 b = polygon.vertex(i + 1);
        total += std::abs(cross(b - a, p - a)) / norm(b - a);
    }
    return total;
}

/// Brute-force distance sum to the face planes of a polyhedron, each plane
/// taken through three face vertices.
inline double brute_distance_sum(const Polyhedron& poly, Point3 p) {
    double total = 0.0;
    for (const auto& face : poly.faces()) {
        const Point3 a = poly.vertices()[face[0]];
        const Point3 b = poly.vertices()[face[1]];
        const Point3 c = poly.vertices()[face[2]];
        const Vec3 n = cross(b - a, c - a);
        total += std::abs(dot(n, p - a)) / norm(n);
    }
    return total;
}

}  // namespace isosum::test
