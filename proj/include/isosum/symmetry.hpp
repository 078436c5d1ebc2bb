#pragma once

#include "isosum/functional.hpp"
#include "isosum/geometry.hpp"
#include "isosum/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isosum {

/// Rotation about `center` by `angle` in (0, 2*pi), or reflection across the
/// line through `center` with unit direction `axis`.
struct Isometry2 {
    enum class Kind { Rotation, Reflection };

    Kind kind = Kind::Rotation;
    Point2 center;
    double angle = 0.0;
    Vec2 axis{1.0, 0.0};

    Point2 apply(Point2 p) const;
};

enum class Prediction { MustBeCVS, IsosumPerpendicularTo, NoPrediction };

struct SymmetryReport {
    std::vector<Isometry2> rotations;
    std::vector<Isometry2> reflections;
    Prediction prediction = Prediction::NoPrediction;
    /// Set when prediction is IsosumPerpendicularTo.
    std::optional<Isometry2> axis;
};

/// Rotations and reflections that permute the vertices of the polygon. The
/// search is anchored at the vertex centroid, which every symmetry fixes.
SymmetryReport detect_symmetries(const Polygon& polygon);

struct Corollary3Check {
    bool passed = false;
    SymmetryReport symmetries;
    Classification2 classification;
    /// |cos| of the angle between the isosum direction and the reflection axis.
    std::optional<double> axis_cosine;
    std::string detail;
};

Corollary3Check check_corollary3(const Polygon& polygon);

/// A caller-declared symmetry of a polyhedron: a rotation by `angle` about
/// the line through `point` with direction `direction`, or a reflection in
/// the plane through `point` with normal `direction`.
struct DeclaredSymmetry3 {
    enum class Kind { Rotation, Reflection };

    Kind kind = Kind::Rotation;
    Point3 point;
    Vec3 direction{0.0, 0.0, 1.0};
    double angle = 0.0;

    Point3 apply(Point3 p) const;
};

/// MustBeCVS iff at least two declared rotations have non-parallel axes.
Prediction predict_corollary4(const std::vector<DeclaredSymmetry3>& declared);

struct Corollary4Check {
    bool passed = false;
    Prediction prediction = Prediction::NoPrediction;
    Classification3 classification;
    /// Declared symmetries that do not map the vertex set onto itself.
    std::vector<std::size_t> invalid_declarations;
    std::string detail;
};

/// Checks each declaration against the vertex set, then the prediction
/// against classify(functional3).
Corollary4Check check_corollary4(const Polyhedron& poly, const std::vector<DeclaredSymmetry3>& declared);

std::string to_string(Prediction prediction);

}  // namespace isosum
