#pragma once

#include "isosum/geometry.hpp"
#include "isosum/polyhedron.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace isosum {

/// V(p) = grad . p + constant, accumulated from `terms` unit-normal distance terms.
struct AffineFunctional2 {
    Vec2 grad;
    double constant = 0.0;
    std::size_t terms = 0;

    double operator()(Point2 p) const { return dot(grad, p) + constant; }
};

struct AffineFunctional3 {
    Vec3 grad;
    double constant = 0.0;
    std::size_t terms = 0;

    double operator()(Point3 p) const { return dot(grad, p) + constant; }
};

/// Per-side distances computed directly from the vertices, never through an
/// affine functional. This is the reference the functionals are checked against.
struct DistanceProfile {
    std::vector<double> distances;
    double total = 0.0;
};

/// Distances from p to the carrier line of every edge. Works for any simple
/// polygon; p must be strictly inside.
DistanceProfile distance_profile(const Polygon& polygon, Point2 p);
/// Distances from p to every face plane of a convex polyhedron.
DistanceProfile distance_profile(const Polyhedron& poly, Point3 p);

AffineFunctional2 functional2(const Polygon& polygon);
AffineFunctional3 functional3(const Polyhedron& poly);

enum class Verdict { CVS, NonCVS };

/// For CVS, `value` holds the constant sum. For NonCVS, `direction` is the
/// unit isosum-line direction (first nonzero component positive).
struct Classification2 {
    Verdict verdict = Verdict::NonCVS;
    double value = 0.0;
    Vec2 direction;
    AffineFunctional2 functional;
};

/// 3D variant: `direction` is the unit normal of the isosum planes.
struct Classification3 {
    Verdict verdict = Verdict::NonCVS;
    double value = 0.0;
    Vec3 direction;
    AffineFunctional3 functional;
};

/// CVS iff |grad| <= tol * terms.
Classification2 classify(const AffineFunctional2& f, double tol = kTol);
Classification3 classify(const AffineFunctional3& f, double tol = kTol);

struct Segment2 {
    Point2 a;
    Point2 b;
};

/// Intersection of the level set {V = level} with the closed convex polygon.
/// A level touching a single vertex yields a zero-length segment.
std::optional<Segment2> isosum_segment(const Polygon& polygon, const AffineFunctional2& f, double level);

enum class PointTest { ImpliesCVS, Collinear, Coplanar, NotEqualSums };

/// Equal-sum test behind the three-point converse for convex polygons.
PointTest three_point_cvs_test(const Polygon& polygon, Point2 p1, Point2 p2, Point2 p3);
PointTest four_point_cvs_test(const Polyhedron& poly, Point3 p1, Point3 p2, Point3 p3, Point3 p4);

/// |a - b| <= kTol * (1 + max(|a|, |b|)).
bool sums_equal(double a, double b);

std::string to_string(Verdict verdict);
std::string to_string(PointTest result);

}  // namespace isosum
