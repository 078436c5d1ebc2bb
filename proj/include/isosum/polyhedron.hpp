#pragma once

#include "isosum/geometry.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace isosum {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator*(Vec3 a, double s) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
    Vec3& operator+=(Vec3 b) { x += b.x; y += b.y; z += b.z; return *this; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

using Point3 = Vec3;

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Point3 a, Point3 b) { return norm(b - a); }
inline bool is_finite(Vec3 a) { return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z); }

struct BoundingBox3 {
    Point3 min;
    Point3 max;

    double diagonal() const { return distance(min, max); }
};

using Face = std::vector<std::size_t>;

/// Closed polyhedral surface. The constructor checks face planarity and the
/// 2-manifold property and reorients all faces outward when the input winding
/// encloses negative volume.
class Polyhedron {
public:
    Polyhedron(std::vector<Point3> vertices, std::vector<Face> faces);

    const std::vector<Point3>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    std::size_t face_count() const { return faces_.size(); }

    friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

private:
    std::vector<Point3> vertices_;
    std::vector<Face> faces_;
};

/// Face carrier alpha*x + beta*y + gamma*z + delta = 0 with a unit normal, in
/// the same canonical sign as BoundaryLine (delta < 0 unless through origin).
struct BoundaryPlane {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;
    double delta = 0.0;
    int epsilon = 1;

    Vec3 normal() const { return {alpha, beta, gamma}; }
    double eval(Point3 p) const { return alpha * p.x + beta * p.y + gamma * p.z + delta; }
};

BoundaryPlane carrier_plane(Point3 on_plane, Vec3 normal);
BoundaryPlane anchored(BoundaryPlane plane, Point3 inside);
double signed_inward_distance(const BoundaryPlane& plane, Point3 p);

/// Unit outward normal of a face (Newell's method).
Vec3 face_normal(const Polyhedron& poly, std::size_t face_index);
double volume(const Polyhedron& poly);
Point3 vertex_centroid(const Polyhedron& poly);
BoundingBox3 bounding_box(const Polyhedron& poly);
bool is_convex(const Polyhedron& poly);

/// Carrier of face i with epsilon anchored at the vertex centroid. Throws
/// NotConvex for non-convex input.
BoundaryPlane boundary_plane_of_face(const Polyhedron& poly, std::size_t face_index);

/// Point classification for convex polyhedra; throws NotConvex otherwise.
Location contains(const Polyhedron& poly, Point3 p, double tol = kTol);

}  // namespace isosum
