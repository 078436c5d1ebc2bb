#pragma once

#include "isosum/geometry.hpp"
#include "isosum/polyhedron.hpp"
#include "isosum/symmetry.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isosum {

enum class SceneKind { Polygon2, Polyhedron3 };

/// Input file contents after validation. Polygons are normalized on load
/// (collinear vertices merged, counter-clockwise); polyhedra are oriented
/// outward.
///
/// JSON schema:
///   {"kind": "polygon2", "vertices": [[x, y], ...]}
///   {"kind": "polyhedron3", "vertices": [[x, y, z], ...], "faces": [[i, j, k, ...], ...],
///    "symmetries": [{"type": "rotation", "point": [x, y, z], "direction": [x, y, z], "order": n},
///                   {"type": "reflection", "point": [x, y, z], "normal": [x, y, z]}]}
struct Scene {
    SceneKind kind = SceneKind::Polygon2;
    std::optional<Polygon> polygon;
    std::optional<Polyhedron> polyhedron;
    std::vector<DeclaredSymmetry3> symmetries;
    /// Load-time notes (merged vertices); not serialized.
    std::vector<std::string> warnings;
};

bool operator==(const Scene& a, const Scene& b);

/// Throws ParseError (with line and column) or ValidationError.
Scene parse_scene(std::string_view text);
Scene load_scene(const std::filesystem::path& path);
std::string serialize_scene(const Scene& scene);

std::string to_string(SceneKind kind);

}  // namespace isosum
