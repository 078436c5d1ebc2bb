#include "isosum/shapes.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <numbers>

namespace isosum::shapes {

Polygon regular_polygon(int sides, double circumradius, Point2 center, double phase) {
    if (sides < 3) throw Error(ErrorKind::DegenerateInput, "regular polygon needs at least 3 sides");
    std::vector<Point2> v;
    for (int k = 0; k < sides; ++k) {
        const double t = phase + 2.0 * std::numbers::pi * k / sides;
        v.push_back(center + circumradius * Vec2{std::cos(t), std::sin(t)});
    }
    return Polygon(std::move(v));
}

Polygon kite(double half_width, double top, double bottom) {
    return Polygon({{0.0, top}, {-half_width, 0.0}, {0.0, bottom}, {half_width, 0.0}});
}

Polygon isosceles_triangle(double half_base, double apex) {
    return Polygon({{0.0, apex}, {-half_base, 0.0}, {half_base, 0.0}});
}

Polygon equiangular_polygon(const std::vector<double>& sides) {
    const auto n = sides.size();
    if (n < 3) throw Error(ErrorKind::DegenerateInput, "equiangular polygon needs at least 3 sides");
    std::vector<Point2> v;
    Point2 p;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        v.push_back(p);
        const double heading = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        p += sides[k] * Vec2{std::cos(heading), std::sin(heading)};
        total += sides[k];
    }
    if (norm(p) > kTol * std::max(1.0, total)) {
        throw Error(ErrorKind::DegenerateInput, "side lengths do not close an equiangular polygon");
    }
    return Polygon(std::move(v));
}

Polyhedron convex_polyhedron(std::vector<Point3> vertices, std::vector<Face> faces) {
    Vec3 sum;
    for (const auto& v : vertices) sum += v;
    const Point3 center = sum / static_cast<double>(vertices.size());
    for (auto& face : faces) {
        const Point3& a = vertices[face[0]];
        Vec3 n;
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            n += cross(vertices[face[i]] - a, vertices[face[i + 1]] - a);
        }
        if (dot(n, a - center) < 0.0) std::reverse(face.begin(), face.end());
    }
    return Polyhedron(std::move(vertices), std::move(faces));
}

Polyhedron box(double dx, double dy, double dz) {
    return parallelepiped({}, {dx, 0.0, 0.0}, {0.0, dy, 0.0}, {0.0, 0.0, dz});
}

Polyhedron parallelepiped(Point3 origin, Vec3 u, Vec3 v, Vec3 w) {
    std::vector<Point3> pts;
    for (int k = 0; k < 8; ++k) {
        pts.push_back(origin + ((k & 1) ? u : Vec3{}) + ((k & 2) ? v : Vec3{}) + ((k & 4) ? w : Vec3{}));
    }
    std::vector<Face> faces = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
    return convex_polyhedron(std::move(pts), std::move(faces));
}

Polyhedron rhombic_pyramid(double height, double half_x, double half_y) {
    std::vector<Point3> pts = {
        {0.0, 0.0, height}, {half_x, 0.0, 0.0}, {0.0, half_y, 0.0}, {-half_x, 0.0, 0.0}, {0.0, -half_y, 0.0}};
    std::vector<Face> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {1, 4, 3, 2}};
    return convex_polyhedron(std::move(pts), std::move(faces));
}

Polyhedron right_prism(const Polygon& base, double height) {
    const auto n = base.size();
    std::vector<Point3> pts;
    for (const auto& v : base.vertices()) pts.push_back({v.x, v.y, 0.0});
    for (const auto& v : base.vertices()) pts.push_back({v.x, v.y, height});
    std::vector<Face> faces;
    Face bottom;
    Face top;
    for (std::size_t i = 0; i < n; ++i) {
        bottom.push_back(i);
        top.push_back(n + i);
        faces.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
    }
    faces.push_back(bottom);
    faces.push_back(top);
    return convex_polyhedron(std::move(pts), std::move(faces));
}

}  // namespace isosum::shapes
