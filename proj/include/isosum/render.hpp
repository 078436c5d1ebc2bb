#pragma once

#include "isosum/functional.hpp"
#include "isosum/partition.hpp"
#include "isosum/scene.hpp"

#include <string>
#include <vector>

namespace isosum {

/// `count` levels at the (j + 1/2)/count quantiles of V over the points of a
/// 64x64 grid that fall inside `region`, clamped to V's range over the
/// vertices. Falls back to evenly spaced levels when no grid point is inside.
std::vector<double> choose_levels(const Polygon& region, const AffineFunctional2& f, int count);

/// SVG 1.1 drawing of the outline and `levels` isosum segments, each labelled
/// with its level. A constant functional is drawn as an annotation instead.
std::string render_svg(const Polygon& convex, const AffineFunctional2& f, int levels);
/// Concave variant: cell outlines and `levels` segments per cell.
std::string render_svg(const Polygon& concave, const Partition& partition, int levels);
/// Dispatches on convexity; 2D scenes only.
std::string render_svg(const Scene& scene, int levels);

}  // namespace isosum
