#include "isosum/symmetry.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <numbers>

#include <fmt/format.h>

namespace isosum {

Point2 Isometry2::apply(Point2 p) const {
    const Vec2 r = p - center;
    if (kind == Kind::Rotation) {
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        return center + Vec2{c * r.x - s * r.y, s * r.x + c * r.y};
    }
    return center + 2.0 * dot(r, axis) * axis - r;
}

Point3 DeclaredSymmetry3::apply(Point3 p) const {
    const Vec3 u = direction / norm(direction);
    const Vec3 r = p - point;
    if (kind == Kind::Reflection) return p - 2.0 * dot(r, u) * u;
    // Rodrigues' rotation formula.
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return point + c * r + s * cross(u, r) + (1.0 - c) * dot(u, r) * u;
}

namespace {

// Accepts the isometry when vertex i lands on vertex target(i) for every i.
template <class Target>
bool permutes(const Polygon& polygon, const Isometry2& iso, Target target, double tol) {
    const auto n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (distance(iso.apply(polygon[i]), polygon[target(i) % n]) > tol) return false;
    }
    return true;
}

Vec2 canonical_axis(Vec2 d) {
    if (d.x < -1e-12 || (std::abs(d.x) <= 1e-12 && d.y < 0.0)) return -d;
    return d;
}

}  // namespace

SymmetryReport detect_symmetries(const Polygon& polygon) {
    const double diag = bounding_box(polygon).diagonal();
    if (area(polygon) <= kTol * diag * diag) throw Error(ErrorKind::DegenerateInput, "polygon has zero area");

    SymmetryReport report;
    const auto n = polygon.size();
    const Point2 c = vertex_centroid(polygon);
    double radius = 0.0;
    for (const auto& v : polygon.vertices()) radius = std::max(radius, distance(c, v));
    const double tol = kTol * std::max(1.0, radius);

    const Vec2 r0 = polygon[0] - c;
    for (std::size_t k = 1; k < n; ++k) {
        const Vec2 rk = polygon[k] - c;
        double angle = std::atan2(cross(r0, rk), dot(r0, rk));
        if (angle <= 0.0) angle += 2.0 * std::numbers::pi;
        const Isometry2 rot{Isometry2::Kind::Rotation, c, angle, {1.0, 0.0}};
        if (permutes(polygon, rot, [&](std::size_t i) { return i + k; }, tol)) report.rotations.push_back(rot);
    }

    for (std::size_t k = 0; k < n; ++k) {
        // The reflection sending vertex 0 to vertex k also sends i to k - i.
        Vec2 dir;
        if (distance(polygon[0], polygon[k]) <= tol) {
            if (norm(r0) <= tol) continue;
            dir = r0 / norm(r0);
        } else {
            const Vec2 chord = polygon[k] - polygon[0];
            dir = perp(chord) / norm(chord);
        }
        const Isometry2 refl{Isometry2::Kind::Reflection, c, 0.0, canonical_axis(dir)};
        if (permutes(polygon, refl, [&](std::size_t i) { return k + n - i; }, tol)) {
            report.reflections.push_back(refl);
        }
    }

    if (!report.rotations.empty()) {
        report.prediction = Prediction::MustBeCVS;
    } else if (!report.reflections.empty()) {
        report.prediction = Prediction::IsosumPerpendicularTo;
        report.axis = report.reflections.front();
    }
    return report;
}

Corollary3Check check_corollary3(const Polygon& polygon) {
    Corollary3Check check;
    check.symmetries = detect_symmetries(polygon);
    check.classification = classify(functional2(polygon));
    const bool cvs = check.classification.verdict == Verdict::CVS;
    switch (check.symmetries.prediction) {
        case Prediction::MustBeCVS:
            check.passed = cvs;
            check.detail = fmt::format("{} nontrivial rotation(s); verdict {}", check.symmetries.rotations.size(),
                                       to_string(check.classification.verdict));
            break;
        case Prediction::IsosumPerpendicularTo: {
            const Vec2 axis = check.symmetries.axis->axis;
            if (cvs) {
                check.passed = true;
                check.detail = fmt::format("reflection axis ({:.9f}, {:.9f}); verdict CVS", axis.x, axis.y);
                break;
            }
            const double cosine = std::abs(dot(axis, check.classification.direction));
            check.axis_cosine = cosine;
            check.passed = cosine <= kTol;
            check.detail = fmt::format("reflection axis ({:.9f}, {:.9f}); isosum direction ({:.9f}, {:.9f}); "
                                       "angle {:.9f} rad",
                                       axis.x, axis.y, check.classification.direction.x,
                                       check.classification.direction.y, std::acos(std::min(1.0, cosine)));
            break;
        }
        case Prediction::NoPrediction:
            check.passed = true;
            check.detail = fmt::format("no symmetry; verdict {}", to_string(check.classification.verdict));
            break;
    }
    return check;
}

Prediction predict_corollary4(const std::vector<DeclaredSymmetry3>& declared) {
    std::vector<Vec3> axes;
    for (const auto& s : declared) {
        if (s.kind != DeclaredSymmetry3::Kind::Rotation) continue;
        const double turns = s.angle / (2.0 * std::numbers::pi);
        if (std::abs(turns - std::round(turns)) <= kTol) continue;
        const double len = norm(s.direction);
        if (len <= kTol) continue;
        axes.push_back(s.direction / len);
    }
    for (std::size_t i = 0; i < axes.size(); ++i) {
        for (std::size_t j = i + 1; j < axes.size(); ++j) {
            if (norm(cross(axes[i], axes[j])) > kTol) return Prediction::MustBeCVS;
        }
    }
    return Prediction::NoPrediction;
}

Corollary4Check check_corollary4(const Polyhedron& poly, const std::vector<DeclaredSymmetry3>& declared) {
    Corollary4Check check;
    const double tol = kTol * std::max(1.0, bounding_box(poly).diagonal());
    for (std::size_t d = 0; d < declared.size(); ++d) {
        if (norm(declared[d].direction) <= kTol) {
            check.invalid_declarations.push_back(d);
            continue;
        }
        for (const auto& v : poly.vertices()) {
            const Point3 image = declared[d].apply(v);
            const bool hit = std::any_of(poly.vertices().begin(), poly.vertices().end(),
                                         [&](const Point3& w) { return distance(image, w) <= tol; });
            if (!hit) {
                check.invalid_declarations.push_back(d);
                break;
            }
        }
    }
    check.prediction = predict_corollary4(declared);
    check.classification = classify(functional3(poly));
    const bool cvs = check.classification.verdict == Verdict::CVS;
    check.passed = check.invalid_declarations.empty() && (check.prediction != Prediction::MustBeCVS || cvs);
    check.detail = fmt::format("{} declared symmetries ({} invalid); prediction {}; verdict {}", declared.size(),
                               check.invalid_declarations.size(), to_string(check.prediction),
                               to_string(check.classification.verdict));
    return check;
}

std::string to_string(Prediction prediction) {
    switch (prediction) {
        case Prediction::MustBeCVS: return "MustBeCVS";
        case Prediction::IsosumPerpendicularTo: return "IsosumPerpendicularTo";
        case Prediction::NoPrediction: return "NoPrediction";
    }
    return "Unknown";
}

}  // namespace isosum
