#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isosum/functional.hpp"
#include "isosum/oracle.hpp"
#include "isosum/scene.hpp"
#include "isosum/shapes.hpp"
#include "isosum/symmetry.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace isosum;
using doctest::Approx;

namespace {

const double kPi = std::numbers::pi;

const std::vector<std::string> kPolygonFixtures = {
    "square.json",   "equilateral.json",         "quad.json",           "kite.json",
    "rhombus.json",  "isosceles.json",           "pentagon.json",       "pentagon_asymmetric.json",
    "triangle_345.json", "triangle_scalene.json", "hexagon_equiangular.json"};

}  // namespace

TEST_CASE("regular pentagon has the full dihedral group") {
    const auto r = detect_symmetries(shapes::regular_polygon(5, 1.0, {2, -1}, 0.3));
    CHECK(r.rotations.size() == 4);
    CHECK(r.reflections.size() == 5);
    CHECK(r.prediction == Prediction::MustBeCVS);
    std::vector<double> angles;
    for (const auto& rot : r.rotations) angles.push_back(rot.angle);
    std::sort(angles.begin(), angles.end());
    for (int k = 1; k <= 4; ++k) CHECK(angles[k - 1] == Approx(2 * kPi * k / 5));
}

TEST_CASE("regular n-gons have n - 1 rotations and n reflections") {
    for (int n = 3; n <= 12; ++n) {
        const auto r = detect_symmetries(shapes::regular_polygon(n, 1.5, {0.1, 0.2}, 0.7));
        CHECK(r.rotations.size() == static_cast<std::size_t>(n - 1));
        CHECK(r.reflections.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("parallelogram has a half-turn only") {
    const auto r = detect_symmetries(Polygon({{0, 0}, {3, 0}, {4, 1}, {1, 1}}));
    REQUIRE(r.rotations.size() == 1);
    CHECK(r.rotations[0].angle == Approx(kPi));
    CHECK(r.rotations[0].center.x == Approx(2.0));
    CHECK(r.rotations[0].center.y == Approx(0.5));
    CHECK(r.reflections.empty());
    CHECK(r.prediction == Prediction::MustBeCVS);
}

TEST_CASE("convex kite has one vertical reflection") {
    const auto r = detect_symmetries(shapes::kite(1, 2, -1));
    CHECK(r.rotations.empty());
    REQUIRE(r.reflections.size() == 1);
    CHECK(std::abs(r.reflections[0].axis.x) <= 1e-12);
    CHECK(std::abs(r.reflections[0].center.x) <= 1e-12);
    CHECK(r.prediction == Prediction::IsosumPerpendicularTo);
    REQUIRE(r.axis.has_value());

    const auto check = check_corollary3(shapes::kite(1, 2, -1));
    CHECK(check.passed);
    REQUIRE(check.axis_cosine.has_value());
    CHECK(*check.axis_cosine <= 1e-9);
}

TEST_CASE("reflection axes through edge midpoints are found") {
    // Isosceles trapezoid: the axis runs through two edge midpoints.
    const auto r = detect_symmetries(Polygon({{0, 0}, {4, 0}, {3, 1}, {1, 1}}));
    CHECK(r.rotations.empty());
    REQUIRE(r.reflections.size() == 1);
    CHECK(std::abs(r.reflections[0].axis.x) <= 1e-12);
    CHECK(r.reflections[0].center.x == Approx(2.0));
}

TEST_CASE("pentagon with one reflection is CVS") {
    const Polygon p = test::fixture_polygon("pentagon.json");
    const auto r = detect_symmetries(p);
    CHECK(r.rotations.empty());
    CHECK(r.reflections.size() == 1);
    const auto check = check_corollary3(p);
    CHECK(check.passed);
    CHECK(check.classification.verdict == Verdict::CVS);
}

TEST_CASE("asymmetric pentagon") {
    const Polygon p = test::fixture_polygon("pentagon_asymmetric.json");
    // Interior angles from the fixture coordinates.
    std::vector<double> angles;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2 u = p.vertex(i + p.size() - 1) - p.vertex(i);
        const Vec2 w = p.vertex(i + 1) - p.vertex(i);
        angles.push_back(std::acos(dot(u, w) / (norm(u) * norm(w))) * 180.0 / kPi);
    }
    std::sort(angles.begin(), angles.end());
    const std::vector<double> expected = {60, 70, 110, 130, 170};
    for (std::size_t i = 0; i < 5; ++i) CHECK(angles[i] == Approx(expected[i]).epsilon(1e-9));

    const auto r = detect_symmetries(p);
    CHECK(r.rotations.empty());
    CHECK(r.reflections.empty());
    CHECK(r.prediction == Prediction::NoPrediction);
    CHECK(classify(functional2(p)).verdict == Verdict::CVS);
    CHECK(check_corollary3(p).passed);
}

TEST_CASE("accepted isometries preserve V") {
    test::Rng rng(31);
    for (const auto& name : kPolygonFixtures) {
        const Polygon p = test::fixture_polygon(name);
        const auto r = detect_symmetries(p);
        std::vector<Isometry2> all = r.rotations;
        all.insert(all.end(), r.reflections.begin(), r.reflections.end());
        for (const auto& iso : all) {
            for (int k = 0; k < 100; ++k) {
                const Point2 q = sample_interior(p, rng());
                const Point2 image = iso.apply(q);
                CHECK(std::abs(distance_profile(p, q).total - distance_profile(p, image).total) <= 1e-9);
            }
        }
    }
}

TEST_CASE("symmetry prediction holds on every convex fixture") {
    for (const auto& name : kPolygonFixtures) {
        INFO(name);
        const auto check = check_corollary3(test::fixture_polygon(name));
        CHECK(check.passed);
    }
}

TEST_CASE("symmetry detection commutes with rigid motions") {
    test::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto sigma = test::random_similarity(rng, true);
        for (const auto& name : {"square.json", "kite.json", "pentagon.json", "pentagon_asymmetric.json"}) {
            const Polygon p = test::fixture_polygon(name);
            const auto before = detect_symmetries(p);
            const auto after = detect_symmetries(transformed(p, sigma));
            CHECK(before.rotations.size() == after.rotations.size());
            CHECK(before.reflections.size() == after.reflections.size());
        }
    }
}

TEST_CASE("declared-axis predictions for polyhedra") {
    CHECK(predict_corollary4({}) == Prediction::NoPrediction);

    const Scene box = load_scene(test::fixture("parallelepiped.json"));
    CHECK(predict_corollary4(box.symmetries) == Prediction::MustBeCVS);
    const auto check = check_corollary4(*box.polyhedron, box.symmetries);
    CHECK(check.passed);
    CHECK(check.invalid_declarations.empty());
    CHECK(check.classification.verdict == Verdict::CVS);

    const Scene pyramid = load_scene(test::fixture("pyramid.json"));
    CHECK(predict_corollary4(pyramid.symmetries) == Prediction::NoPrediction);
    const auto pc = check_corollary4(*pyramid.polyhedron, pyramid.symmetries);
    CHECK(pc.passed);
    CHECK(pc.classification.verdict == Verdict::NonCVS);

    // Parallel axes do not count as different axes.
    std::vector<DeclaredSymmetry3> parallel(2);
    parallel[0].angle = kPi;
    parallel[1].angle = kPi;
    parallel[1].point = {1, 0, 0};
    CHECK(predict_corollary4(parallel) == Prediction::NoPrediction);
}

TEST_CASE("declarations that are not symmetries are reported") {
    // An oblique parallelepiped is centrally symmetric, but the lines through
    // opposite face centres are not half-turn axes.
    const Polyhedron oblique = shapes::parallelepiped({0, 0, 0}, {2, 0, 0}, {0.5, 1.5, 0}, {0.3, -0.4, 1.2});
    const Point3 c = vertex_centroid(oblique);
    std::vector<DeclaredSymmetry3> axes;
    for (Vec3 d : {Vec3{2, 0, 0}, Vec3{0.5, 1.5, 0}, Vec3{0.3, -0.4, 1.2}}) {
        DeclaredSymmetry3 s;
        s.point = c;
        s.direction = d;
        s.angle = kPi;
        axes.push_back(s);
    }
    const auto check = check_corollary4(oblique, axes);
    CHECK(check.invalid_declarations.size() == 3);
    CHECK_FALSE(check.passed);
    // The solid is still CVS: opposite faces are parallel.
    CHECK(classify(functional3(oblique)).verdict == Verdict::CVS);
}

TEST_CASE("prism over the reflection pentagon") {
    const Scene prism = load_scene(test::fixture("prism.json"));
    REQUIRE(prism.symmetries.size() == 1);
    const auto check = check_corollary4(*prism.polyhedron, prism.symmetries);
    CHECK(check.passed);
    CHECK(check.invalid_declarations.empty());
    CHECK(check.prediction == Prediction::NoPrediction);
    CHECK(check.classification.verdict == Verdict::CVS);
    CHECK(check.classification.value == Approx(5 + std::sqrt(3.0) + 2.0).epsilon(1e-12));
}

TEST_CASE("declared 3D isometries") {
    DeclaredSymmetry3 quarter;
    quarter.point = {1, 1, 0};
    quarter.direction = {0, 0, 2};
    quarter.angle = kPi / 2;
    const Point3 q = quarter.apply({2, 1, 5});
    CHECK(q.x == Approx(1.0));
    CHECK(q.y == Approx(2.0));
    CHECK(q.z == Approx(5.0));

    DeclaredSymmetry3 mirror;
    mirror.kind = DeclaredSymmetry3::Kind::Reflection;
    mirror.point = {0, 0, 1};
    mirror.direction = {0, 0, 3};
    const Point3 m = mirror.apply({0.5, 0.5, 0.25});
    CHECK(m.z == Approx(1.75));
    CHECK(m.x == Approx(0.5));
}
