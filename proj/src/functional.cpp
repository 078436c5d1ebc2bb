#include "isosum/functional.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

#include <fmt/format.h>

namespace isosum {

namespace {

void require_convex(const Polygon& polygon) {
    const auto report = is_convex(polygon);
    if (report.verdict == Convexity::Degenerate) {
        throw Error(ErrorKind::DegenerateInput, "degenerate polygon");
    }
    if (report.verdict == Convexity::Concave) {
        throw Error(ErrorKind::NotConvex,
                    fmt::format("polygon has {} reflex vertices", report.reflex_vertex_indices.size()));
    }
}

void require_convex(const Polyhedron& poly) {
    if (!is_convex(poly)) throw Error(ErrorKind::NotConvex, "polyhedron is not convex");
}

void require_inside(const Polygon& polygon, Point2 p) {
    if (contains(polygon, p) != Location::Inside) {
        throw Error(ErrorKind::OutsideRegion, fmt::format("point ({}, {}) is not strictly inside", p.x, p.y));
    }
}

void require_inside(const Polyhedron& poly, Point3 p) {
    if (contains(poly, p) != Location::Inside) {
        throw Error(ErrorKind::OutsideRegion,
                    fmt::format("point ({}, {}, {}) is not strictly inside", p.x, p.y, p.z));
    }
}

// First component with magnitude above a tiny threshold is made positive.
template <class V>
V canonical_sign(V v, std::initializer_list<double V::*> members) {
    for (auto m : members) {
        if (std::abs(v.*m) > 1e-12) {
            return v.*m < 0.0 ? -v : v;
        }
    }
    return v;
}

}  // namespace

DistanceProfile distance_profile(const Polygon& polygon, Point2 p) {
    require_inside(polygon, p);
    DistanceProfile profile;
    profile.distances.reserve(polygon.size());
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto [a, b] = polygon.edge(i);
        profile.distances.push_back(point_line_distance(p, a, b));
        profile.total += profile.distances.back();
    }
    return profile;
}

DistanceProfile distance_profile(const Polyhedron& poly, Point3 p) {
    require_inside(poly, p);
    DistanceProfile profile;
    profile.distances.reserve(poly.face_count());
    for (const auto& face : poly.faces()) {
        // Area vector of the face fan; its direction is the face normal.
        const Point3& o = poly.vertices()[face[0]];
        Vec3 area_vec;
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            area_vec += cross(poly.vertices()[face[i]] - o, poly.vertices()[face[i + 1]] - o);
        }
        profile.distances.push_back(std::abs(dot(area_vec, p - o)) / norm(area_vec));
        profile.total += profile.distances.back();
    }
    return profile;
}

AffineFunctional2 functional2(const Polygon& polygon) {
    require_convex(polygon);
    AffineFunctional2 f;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const BoundaryLine line = boundary_line_of_edge(polygon, i);
        f.grad += line.epsilon * line.normal();
        f.constant += line.epsilon * line.gamma;
    }
    f.terms = polygon.size();
    return f;
}

AffineFunctional3 functional3(const Polyhedron& poly) {
    require_convex(poly);
    AffineFunctional3 f;
    for (std::size_t i = 0; i < poly.face_count(); ++i) {
        const BoundaryPlane plane = boundary_plane_of_face(poly, i);
        f.grad += plane.epsilon * plane.normal();
        f.constant += plane.epsilon * plane.delta;
    }
    f.terms = poly.face_count();
    return f;
}

Classification2 classify(const AffineFunctional2& f, double tol) {
    Classification2 c;
    c.functional = f;
    const double g = norm(f.grad);
    if (g <= tol * static_cast<double>(std::max<std::size_t>(f.terms, 1))) {
        c.verdict = Verdict::CVS;
        c.value = f.constant;
        return c;
    }
    c.verdict = Verdict::NonCVS;
    c.direction = canonical_sign(perp(f.grad) / g, {&Vec2::x, &Vec2::y});
    return c;
}

Classification3 classify(const AffineFunctional3& f, double tol) {
    Classification3 c;
    c.functional = f;
    const double g = norm(f.grad);
    if (g <= tol * static_cast<double>(std::max<std::size_t>(f.terms, 1))) {
        c.verdict = Verdict::CVS;
        c.value = f.constant;
        return c;
    }
    c.verdict = Verdict::NonCVS;
    c.direction = canonical_sign(f.grad / g, {&Vec3::x, &Vec3::y, &Vec3::z});
    return c;
}

std::optional<Segment2> isosum_segment(const Polygon& polygon, const AffineFunctional2& f, double level) {
    require_convex(polygon);
    const auto c = classify(f);
    if (c.verdict == Verdict::CVS) {
        throw Error(ErrorKind::CVSRegion, "functional is constant; every level set is empty or the whole region");
    }
    const double tol = kTol * (1.0 + std::abs(level));
    const auto n = polygon.size();
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = f(polygon[i]) - level;

    std::vector<Point2> hits;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (std::abs(g[i]) <= tol) {
            hits.push_back(polygon[i]);
            continue;
        }
        if (std::abs(g[j]) <= tol) continue;
        if ((g[i] < 0.0) != (g[j] < 0.0)) {
            const double t = g[i] / (g[i] - g[j]);
            hits.push_back(polygon[i] + t * (polygon[j] - polygon[i]));
        }
    }
    if (hits.empty()) return std::nullopt;
    auto along = [&](const Point2& p) { return dot(p, c.direction); };
    const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(),
                                              [&](const Point2& a, const Point2& b) { return along(a) < along(b); });
    return Segment2{*lo, *hi};
}

bool sums_equal(double a, double b) {
    return std::abs(a - b) <= kTol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

PointTest three_point_cvs_test(const Polygon& polygon, Point2 p1, Point2 p2, Point2 p3) {
    require_convex(polygon);
    const double v1 = distance_profile(polygon, p1).total;
    const double v2 = distance_profile(polygon, p2).total;
    const double v3 = distance_profile(polygon, p3).total;
    if (!(sums_equal(v1, v2) && sums_equal(v2, v3) && sums_equal(v1, v3))) return PointTest::NotEqualSums;
    const double diag = bounding_box(polygon).diagonal();
    const double tri_area = 0.5 * std::abs(cross(p2 - p1, p3 - p1));
    if (tri_area <= 1e-12 * diag * diag) return PointTest::Collinear;
    return PointTest::ImpliesCVS;
}

PointTest four_point_cvs_test(const Polyhedron& poly, Point3 p1, Point3 p2, Point3 p3, Point3 p4) {
    require_convex(poly);
    const double v[4] = {distance_profile(poly, p1).total, distance_profile(poly, p2).total,
                         distance_profile(poly, p3).total, distance_profile(poly, p4).total};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!sums_equal(v[i], v[j])) return PointTest::NotEqualSums;
        }
    }
    const double diag = bounding_box(poly).diagonal();
    const double tet_volume = std::abs(dot(p2 - p1, cross(p3 - p1, p4 - p1))) / 6.0;
    if (tet_volume <= 1e-12 * diag * diag * diag) return PointTest::Coplanar;
    return PointTest::ImpliesCVS;
}

std::string to_string(Verdict verdict) { return verdict == Verdict::CVS ? "CVS" : "NonCVS"; }

std::string to_string(PointTest result) {
    switch (result) {
        case PointTest::ImpliesCVS: return "ImpliesCVS";
        case PointTest::Collinear: return "Collinear";
        case PointTest::Coplanar: return "Coplanar";
        case PointTest::NotEqualSums: return "NotEqualSums";
    }
    return "Unknown";
}

}  // namespace isosum
