// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "isosum/functional.hpp"
#include "isosum/lp.hpp"
#include "isosum/oracle.hpp"
#include "isosum/partition.hpp"
#include "isosum/scene.hpp"
#include "isosum/shapes.hpp"
#include "isosum/symmetry.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

using namespace isosum;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

Polygon fixture_polygon(const std::string& name) { return test::fixture_polygon(name); }

Outcome viviani_baseline() {
    Outcome o;
    const auto c = classify(functional2(fixture_polygon("equilateral.json")));
    const double err = std::abs(c.value - kSqrt3 / 2);
    o.require(c.verdict == Verdict::CVS, "not CVS");
    o.require(err <= 1e-9, fmt::format("value error {:.3g}", err));
    o.note(fmt::format("value {:.12f}, error {:.3g}", c.value, err));
    return o;
}

Outcome quadrilateral_direction() {
    Outcome o;
    const auto c = classify(functional2(fixture_polygon("quad.json")));
    o.require(c.verdict == Verdict::NonCVS, "classified CVS");
    const double slope = c.direction.y / c.direction.x;
    const double err = std::abs(slope - (1 + kSqrt2));
    o.require(err <= 1e-9, fmt::format("slope error {:.3g}", err));
    o.note(fmt::format("slope {:.12f}, error {:.3g}", slope, err));
    return o;
}

Outcome kite_closed_form() {
    Outcome o;
    const double a = 1, b = 2, g = -1;
    const Polygon kite = shapes::kite(a, b, g);
    const auto f = functional2(kite);
    const double gy = -2 * a / std::hypot(a, b) + 2 * a / std::hypot(a, g);
    const double c0 = 2 * a * b / std::hypot(a, b) - 2 * a * g / std::hypot(a, g);
    const double err = std::max({std::abs(f.grad.x), std::abs(f.grad.y - gy), std::abs(f.constant - c0)});
    o.require(err <= 1e-12, fmt::format("coefficient error {:.3g}", err));
    const auto c = classify(f);
    o.require(c.verdict == Verdict::NonCVS && std::abs(c.direction.y) <= 1e-12, "isosum direction not horizontal");
    for (double y : {-0.5, 0.5, 1.5}) {
        const auto seg = isosum_segment(kite, f, f({0, y}));
        o.require(seg && std::abs(seg->a.y - seg->b.y) <= 1e-12, fmt::format("segment at y={} not horizontal", y));
    }
    o.note(fmt::format("coefficient error {:.3g}", err));
    // The y coefficient vanishes when beta = -gamma.
    for (double beta : {0.5, 1.0, 2.0, 3.7}) {
        const auto r = classify(functional2(shapes::kite(a, beta, -beta)));
        o.require(r.verdict == Verdict::CVS, fmt::format("rhombus beta={} not CVS", beta));
    }
    o.note("rhombus beta=-gamma CVS for 4 values");
    return o;
}

Outcome isosceles_condition() {
    Outcome o;
    const auto eq = classify(functional2(shapes::isosceles_triangle(1.0, kSqrt3)));
    o.require(eq.verdict == Verdict::CVS, "beta=sqrt3 not CVS");
    const auto other = classify(functional2(shapes::isosceles_triangle(1.0, 1.7)));
    o.require(other.verdict == Verdict::NonCVS, "beta=1.7 classified CVS");
    o.require(std::abs(other.direction.y) <= 1e-12, "beta=1.7 direction not horizontal");
    o.note(fmt::format("beta=1.7 direction ({:.12f}, {:.3g})", other.direction.x, other.direction.y));
    return o;
}

Outcome concave_kite() {
    Outcome o;
    const Polygon kite = fixture_polygon("kite_concave.json");
    const Partition part = partition(kite);
    o.require(part.cells.size() == 3, fmt::format("{} cells", part.cells.size()));
    if (part.cells.size() != 3) return o;
    // Origin side is -1.
    const std::vector<std::vector<int>> table = {{-1, 1, -1, -1}, {-1, 1, 1, -1}, {-1, -1, 1, -1}};
    for (std::size_t i = 0; i < 3; ++i) {
        o.require(part.cells[i].sign_vector.signs == table[i], fmt::format("cell {} sign vector", i));
    }
    const std::vector<Vec2> expected = {{156, -100}, {1, 0}, {156, 100}};
    double worst = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto c = classify(part.cells[i].functional);
        worst = std::max(worst, test::line_angle(c.direction, expected[i]));
    }
    o.require(worst <= 1e-9, fmt::format("direction angle {:.3g} rad", worst));
    const Triple t = equal_sum_triple(kite, part);
    const double vp = test::brute_distance_sum(kite, t.p);
    const double spread = std::max(std::abs(test::brute_distance_sum(kite, t.q1) - vp),
                                   std::abs(test::brute_distance_sum(kite, t.q2) - vp));
    const double tri = 0.5 * std::abs(cross(t.q1 - t.p, t.q2 - t.p));
    const double diag = bounding_box(kite).diagonal();
    o.require(spread <= 1e-9, fmt::format("triple sums differ by {:.3g}", spread));
    o.require(tri > 1e-12 * diag * diag, "triple collinear");
    o.note(fmt::format("max angle {:.3g} rad, triple spread {:.3g}, triple area {:.3g}", worst, spread, tri));
    return o;
}

Outcome three_point_consistency() {
    Outcome o;
    for (const std::string name : {"square.json", "equilateral.json", "quad.json", "pentagon.json"}) {
        const Polygon p = fixture_polygon(name);
        const bool cvs = classify(functional2(p)).verdict == Verdict::CVS;
        std::size_t implies = 0, sampled = 0;
        for (std::uint64_t k = 0; k < 10000; ++k) {
            const std::uint64_t seed = 100000 * k;
            const Point2 a = sample_interior(p, seed + 1);
            const Point2 b = sample_interior(p, seed + 2);
            const Point2 c = sample_interior(p, seed + 3);
            const auto r = three_point_cvs_test(p, a, b, c);
            ++sampled;
            if (r == PointTest::ImpliesCVS) ++implies;
        }
        if (cvs) {
            o.require(implies == sampled, fmt::format("{}: {} of {} triples imply CVS", name, implies, sampled));
        } else {
            o.require(implies == 0, fmt::format("{}: {} equal-sum non-collinear triples", name, implies));
            // Equal-sum triples exist only along an isosum segment.
            const auto f = functional2(p);
            const auto seg = isosum_segment(p, f, f(centroid(p)));
            const auto r = three_point_cvs_test(p, seg->a + 0.2 * (seg->b - seg->a), seg->a + 0.5 * (seg->b - seg->a),
                                                seg->a + 0.7 * (seg->b - seg->a));
            o.require(r == PointTest::Collinear, fmt::format("{}: segment triple not Collinear", name));
        }
        o.note(fmt::format("{} {}: {}/{} ImpliesCVS", name, cvs ? "CVS" : "NonCVS", implies, sampled));
    }
    return o;
}

Outcome reflection_pentagon() {
    Outcome o;
    const Polygon p = fixture_polygon("pentagon.json");
    const auto c = classify(functional2(p));
    const double err = std::abs(c.value - (5 + kSqrt3));
    o.require(c.verdict == Verdict::CVS, "not CVS");
    o.require(err <= 1e-9, fmt::format("value error {:.3g}", err));
    const auto s = detect_symmetries(p);
    o.require(s.reflections.size() == 1 && s.rotations.empty(),
              fmt::format("{} reflections, {} rotations", s.reflections.size(), s.rotations.size()));
    o.note(fmt::format("value {:.12f}, {} reflection, {} rotations", c.value, s.reflections.size(),
                       s.rotations.size()));
    return o;
}

Outcome asymmetric_pentagon() {
    Outcome o;
    const Polygon p = fixture_polygon("pentagon_asymmetric.json");
    std::vector<double> angles;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2 u = p.vertex(i + p.size() - 1) - p.vertex(i);
        const Vec2 w = p.vertex(i + 1) - p.vertex(i);
        angles.push_back(std::acos(dot(u, w) / (norm(u) * norm(w))) * 180.0 / std::numbers::pi);
    }
    std::sort(angles.begin(), angles.end());
    const std::vector<double> expected = {60, 70, 110, 130, 170};
    for (std::size_t i = 0; i < 5; ++i) {
        o.require(std::abs(angles[i] - expected[i]) <= 1e-9, fmt::format("angle {:.12f}", angles[i]));
    }
    const auto s = detect_symmetries(p);
    o.require(s.rotations.empty() && s.reflections.empty(), "symmetry detected");
    o.require(classify(functional2(p)).verdict == Verdict::CVS, "not CVS");
    o.note(fmt::format("angles 60/70/110/130/170, {} symmetries, CVS", s.rotations.size() + s.reflections.size()));
    return o;
}

Outcome pyramid() {
    Outcome o;
    const double alpha = std::sqrt(7.5);
    const auto f = functional3(shapes::rhombic_pyramid(alpha, 1, 1));
    o.require(norm(f.grad) <= 1e-9, fmt::format("|grad| {:.3g}", norm(f.grad)));
    o.require(std::abs(f.constant - alpha) <= 1e-9, fmt::format("constant error {:.3g}", f.constant - alpha));
    const auto unit = classify(functional3(shapes::rhombic_pyramid(1, 1, 1)));
    o.require(unit.verdict == Verdict::NonCVS, "unit pyramid CVS");
    o.require(norm(unit.direction - Vec3{0, 0, 1}) <= 1e-12, "normal not (0,0,1)");

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    double worst_alpha = 0, worst_residual = 0;
    for (int k = 0; k < 5; ++k) {
        const double beta = u(rng);
        const double gamma = u(rng);
        const auto gz = [&](double a) { return functional3(shapes::rhombic_pyramid(a, beta, gamma)).grad.z; };
        double lo = 1e-3, hi = 100.0;
        o.require(gz(lo) < 0 && gz(hi) > 0, "grad z does not change sign");
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            (gz(mid) < 0 ? lo : hi) = mid;
        }
        const double root = 0.5 * (lo + hi);
        const double predicted = std::sqrt(15.0) * beta * gamma / std::hypot(beta, gamma);
        worst_alpha = std::max(worst_alpha, std::abs(root - predicted));
        worst_residual = std::max(worst_residual, std::abs(gz(predicted)));
    }
    o.require(worst_alpha <= 1e-9, fmt::format("bisection root off by {:.3g}", worst_alpha));
    o.require(worst_residual <= 1e-9, fmt::format("grad z at predicted alpha {:.3g}", worst_residual));
    o.note(fmt::format("|grad| {:.3g}, root error {:.3g}, residual {:.3g}", norm(f.grad), worst_alpha,
                       worst_residual));
    return o;
}

Outcome equiangular_and_prism() {
    Outcome o;
    const Polygon hex = fixture_polygon("hexagon_equiangular.json");
    o.require(detect_symmetries(hex).rotations.empty(), "hexagon fixture is regular-like");
    o.require(classify(functional2(hex)).verdict == Verdict::CVS, "hexagon not CVS");
    const Scene prism = load_scene(test::fixture("prism.json"));
    const auto c = classify(functional3(*prism.polyhedron));
    o.require(c.verdict == Verdict::CVS, "prism not CVS");
    o.note(fmt::format("hexagon CVS, prism CVS value {:.9f}", c.value));
    return o;
}

Outcome lp_identity() {
    Outcome o;
    double worst = 0;
    for (const std::string name : {"equilateral.json", "triangle_345.json", "triangle_scalene.json"}) {
        const Polygon t = fixture_polygon(name);
        const double s = area(t);
        for (std::uint64_t k = 0; k < 100; ++k) {
            const double r = check_duality(t, sample_interior(t, 500 + k));
            worst = std::max(worst, r / (1 + 2 * s));
        }
    }
    o.require(worst <= 1e-9, fmt::format("scaled residual {:.3g}", worst));
    const auto a = triangle_to_lp(fixture_polygon("equilateral.json")).side_lengths;
    o.require(a[0] == a[1] && a[1] == a[2], "equilateral coefficients not proportional to (1,1,1)");
    o.note(fmt::format("max scaled residual {:.3g}, equilateral a = ({}, {}, {})", worst, a[0], a[1], a[2]));
    return o;
}

Outcome oracle_suite() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::string> names = {
        "square.json",      "equilateral.json",         "quad.json",         "kite.json",
        "kite_concave.json", "rhombus.json",            "isosceles.json",    "pentagon.json",
        "pentagon_asymmetric.json", "hexagon_equiangular.json", "triangle_345.json", "triangle_scalene.json",
        "l_hexagon.json",   "cube.json",                "parallelepiped.json", "pyramid.json",
        "prism.json"};
    double worst = 0;
    for (const auto& name : names) {
        const Scene s = load_scene(test::fixture(name));
        OracleSummary r;
        if (s.kind == SceneKind::Polyhedron3) {
            r = oracle_check(*s.polyhedron, functional3(*s.polyhedron), 10000, 1);
        } else if (is_convex(*s.polygon).verdict == Convexity::Concave) {
            r = oracle_check(*s.polygon, partition(*s.polygon), 10000, 1);
        } else {
            r = oracle_check(*s.polygon, functional2(*s.polygon), 10000, 1);
        }
        o.require(r.passed, fmt::format("{}: scaled residual {:.3g}", name, r.max_scaled_residual));
        worst = std::max(worst, r.max_scaled_residual);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds <= 10.0, fmt::format("took {:.2f} s", seconds));
    o.note(fmt::format("{} fixtures x 10000 samples, max scaled residual {:.3g}, {:.2f} s", names.size(), worst,
                       seconds));
    return o;
}

Outcome symmetry_checks() {
    Outcome o;
    std::size_t checked = 0;
    for (const std::string name :
         {"square.json", "equilateral.json", "quad.json", "kite.json", "rhombus.json", "isosceles.json",
          "pentagon.json", "pentagon_asymmetric.json", "hexagon_equiangular.json", "triangle_345.json",
          "triangle_scalene.json"}) {
        const auto c = check_corollary3(fixture_polygon(name));
        o.require(c.passed, fmt::format("{}: {}", name, c.detail));
        ++checked;
    }
    const Scene box = load_scene(test::fixture("parallelepiped.json"));
    o.require(predict_corollary4(box.symmetries) == Prediction::MustBeCVS, "no MustBeCVS prediction");
    const auto c4 = check_corollary4(*box.polyhedron, box.symmetries);
    o.require(c4.passed && c4.classification.verdict == Verdict::CVS, c4.detail);
    o.note(fmt::format("{} convex polygons pass; parallelepiped {}", checked, c4.detail));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"viviani baseline", viviani_baseline},
        {"quadrilateral isosum slope", quadrilateral_direction},
        {"kite closed form", kite_closed_form},
        {"isosceles condition", isosceles_condition},
        {"concave kite partition", concave_kite},
        {"three-point consistency", three_point_consistency},
        {"reflection pentagon", reflection_pentagon},
        {"asymmetric pentagon", asymmetric_pentagon},
        {"pyramid", pyramid},
        {"equiangular hexagon and prism", equiangular_and_prism},
        {"triangle LP identity", lp_identity},
        {"oracle suite", oracle_suite},
        {"symmetry predictions", symmetry_checks},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = fmt::format("exception: {}", e.what());
        }
        failures += o.passed ? 0 : 1;
        std::cout << fmt::format("[{}] {:2d} {}: {}\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                                 o.detail);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
