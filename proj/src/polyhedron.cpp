#include "isosum/polyhedron.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include <fmt/format.h>

namespace isosum {

namespace {

Vec3 newell(const std::vector<Point3>& vertices, const Face& face) {
    Vec3 n;
    for (std::size_t i = 0; i < face.size(); ++i) {
        const Point3& a = vertices[face[i]];
        const Point3& b = vertices[face[(i + 1) % face.size()]];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n;
}

Point3 face_center(const std::vector<Point3>& vertices, const Face& face) {
    Vec3 sum;
    for (auto i : face) sum += vertices[i];
    return sum / static_cast<double>(face.size());
}

double signed_volume(const std::vector<Point3>& vertices, const std::vector<Face>& faces) {
    double six_v = 0.0;
    for (const auto& face : faces) {
        const Point3& a = vertices[face[0]];
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            six_v += dot(a, cross(vertices[face[i]], vertices[face[i + 1]]));
        }
    }
    return six_v / 6.0;
}

BoundingBox3 box_of(const std::vector<Point3>& vertices) {
    BoundingBox3 box{vertices.front(), vertices.front()};
    for (const auto& v : vertices) {
        box.min = {std::min(box.min.x, v.x), std::min(box.min.y, v.y), std::min(box.min.z, v.z)};
        box.max = {std::max(box.max.x, v.x), std::max(box.max.y, v.y), std::max(box.max.z, v.z)};
    }
    return box;
}

}  // namespace

Polyhedron::Polyhedron(std::vector<Point3> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
    if (vertices_.size() < 4) {
        throw Error(ErrorKind::DegenerateInput,
                    fmt::format("polyhedron needs at least 4 vertices, got {}", vertices_.size()));
    }
    if (faces_.size() < 4) {
        throw Error(ErrorKind::NotClosed,
                    fmt::format("polyhedron needs at least 4 faces, got {}", faces_.size()));
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!is_finite(vertices_[i])) {
            throw Error(ErrorKind::DegenerateInput, fmt::format("vertex {} is not finite", i));
        }
    }
    const double diag = box_of(vertices_).diagonal();
    const double plane_tol = kTol * std::max(1.0, diag);

    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& face = faces_[f];
        if (face.size() < 3) {
            throw Error(ErrorKind::DegenerateInput, fmt::format("face {} has fewer than 3 vertices", f));
        }
        for (std::size_t k = 0; k < face.size(); ++k) {
            if (face[k] >= vertices_.size()) {
                throw Error(ErrorKind::ValidationError,
                            fmt::format("face {} references missing vertex {}", f, face[k]));
            }
            if (std::count(face.begin(), face.end(), face[k]) != 1) {
                throw Error(ErrorKind::DegenerateInput, fmt::format("face {} repeats vertex {}", f, face[k]));
            }
            ++directed[{face[k], face[(k + 1) % face.size()]}];
        }
        const Vec3 n = newell(vertices_, face);
        const double len = norm(n);
        if (len <= kTol) throw Error(ErrorKind::DegenerateInput, fmt::format("face {} has zero area", f));
        const Vec3 unit = n / len;
        const Point3 c = face_center(vertices_, face);
        for (auto i : face) {
            if (std::abs(dot(unit, vertices_[i] - c)) > plane_tol) {
                throw Error(ErrorKind::DegenerateInput, fmt::format("face {} is not planar", f));
            }
        }
    }
    for (const auto& [edge, count] : directed) {
        if (count != 1) {
            throw Error(ErrorKind::ValidationError,
                        fmt::format("edge {}-{} is used twice in the same direction (inconsistent winding)",
                                    edge.first, edge.second));
        }
        if (!directed.contains({edge.second, edge.first})) {
            throw Error(ErrorKind::NotClosed,
                        fmt::format("edge {}-{} borders only one face", edge.first, edge.second));
        }
    }

    const double v = signed_volume(vertices_, faces_);
    if (std::abs(v) <= kTol * diag * diag * diag) {
        throw Error(ErrorKind::DegenerateInput, "polyhedron encloses zero volume");
    }
    if (v < 0.0) {
        for (auto& face : faces_) std::reverse(face.begin(), face.end());
    }
}

BoundaryPlane carrier_plane(Point3 on_plane, Vec3 normal) {
    const double len = norm(normal);
    if (len <= kTol) throw Error(ErrorKind::DegenerateInput, "plane with zero normal");
    const Vec3 u = normal / len;
    BoundaryPlane plane{u.x, u.y, u.z, -dot(u, on_plane), 1};
    bool flip = false;
    if (std::abs(plane.delta) > kTol) {
        flip = plane.delta > 0.0;
    } else {
        plane.delta = 0.0;
        if (std::abs(plane.alpha) > kTol) flip = plane.alpha < 0.0;
        else if (std::abs(plane.beta) > kTol) flip = plane.beta < 0.0;
        else flip = plane.gamma < 0.0;
    }
    if (flip) {
        plane.alpha = -plane.alpha;
        plane.beta = -plane.beta;
        plane.gamma = -plane.gamma;
        plane.delta = -plane.delta;
    }
    plane.alpha += 0.0;
    plane.beta += 0.0;
    plane.gamma += 0.0;
    plane.delta += 0.0;
    return plane;
}

BoundaryPlane anchored(BoundaryPlane plane, Point3 inside) {
    plane.epsilon = plane.eval(inside) >= 0.0 ? 1 : -1;
    return plane;
}

double signed_inward_distance(const BoundaryPlane& plane, Point3 p) {
    return plane.epsilon * plane.eval(p);
}

Vec3 face_normal(const Polyhedron& poly, std::size_t face_index) {
    const Vec3 n = newell(poly.vertices(), poly.faces().at(face_index));
    return n / norm(n);
}

double volume(const Polyhedron& poly) { return signed_volume(poly.vertices(), poly.faces()); }

Point3 vertex_centroid(const Polyhedron& poly) {
    Vec3 sum;
    for (const auto& v : poly.vertices()) sum += v;
    return sum / static_cast<double>(poly.vertices().size());
}

BoundingBox3 bounding_box(const Polyhedron& poly) { return box_of(poly.vertices()); }

bool is_convex(const Polyhedron& poly) {
    const double tol = kTol * std::max(1.0, bounding_box(poly).diagonal());
    for (std::size_t f = 0; f < poly.face_count(); ++f) {
        const Vec3 n = face_normal(poly, f);
        const Point3 c = face_center(poly.vertices(), poly.faces()[f]);
        for (const auto& v : poly.vertices()) {
            if (dot(n, v - c) > tol) return false;
        }
    }
    return true;
}

BoundaryPlane boundary_plane_of_face(const Polyhedron& poly, std::size_t face_index) {
    if (face_index >= poly.face_count()) {
        throw Error(ErrorKind::ValidationError, fmt::format("face index {} out of range", face_index));
    }
    if (!is_convex(poly)) {
        throw Error(ErrorKind::NotConvex, "inward side of a face is undefined for a non-convex polyhedron");
    }
    const auto& face = poly.faces()[face_index];
    const BoundaryPlane plane = carrier_plane(poly.vertices()[face[0]], face_normal(poly, face_index));
    return anchored(plane, vertex_centroid(poly));
}

Location contains(const Polyhedron& poly, Point3 p, double tol) {
    if (!is_convex(poly)) {
        throw Error(ErrorKind::NotConvex, "point location is implemented for convex polyhedra only");
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < poly.face_count(); ++f) {
        const Vec3 n = face_normal(poly, f);
        const Point3 c = face_center(poly.vertices(), poly.faces()[f]);
        worst = std::max(worst, dot(n, p - c));
    }
    if (worst > tol) return Location::Outside;
    if (worst >= -tol) return Location::OnBoundary;
    return Location::Inside;
}

}  // namespace isosum
