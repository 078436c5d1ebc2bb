#pragma once

#include "isosum/geometry.hpp"
#include "isosum/polyhedron.hpp"

#include <vector>

namespace isosum::shapes {

Polygon regular_polygon(int sides, double circumradius = 1.0, Point2 center = {}, double phase = 0.0);

/// Kite (0, top), (-half_width, 0), (0, bottom), (half_width, 0). Convex for
/// bottom < 0, concave (reflex at the third vertex) for 0 < bottom < top.
Polygon kite(double half_width, double top, double bottom);

/// Isosceles triangle (0, apex), (-half_base, 0), (half_base, 0).
Polygon isosceles_triangle(double half_base, double apex);

/// Equiangular polygon walked counter-clockwise from the origin with the
/// given side lengths. Throws DegenerateInput when the walk does not close.
Polygon equiangular_polygon(const std::vector<double>& sides);

/// Faces are reoriented outward about the vertex centroid, so the vertex set
/// must be in convex position.
Polyhedron convex_polyhedron(std::vector<Point3> vertices, std::vector<Face> faces);

Polyhedron box(double dx, double dy, double dz);
Polyhedron parallelepiped(Point3 origin, Vec3 u, Vec3 v, Vec3 w);
/// Apex (0, 0, height) over the rhombus (+-half_x, 0, 0), (0, +-half_y, 0).
Polyhedron rhombic_pyramid(double height, double half_x, double half_y);
Polyhedron right_prism(const Polygon& base, double height);

}  // namespace isosum::shapes
