#include "isosum/report.hpp"

#include "isosum/error.hpp"

#include <cmath>

#include <fmt/format.h>

namespace isosum {

namespace {

// Values that would print as -0.000000000 are shown as zero.
std::string num(double v) { return fmt::format("{:.9f}", std::abs(v) < 5e-10 ? 0.0 : v); }

std::string point(Vec2 v) { return fmt::format("({}, {})", num(v.x), num(v.y)); }
std::string point(Vec3 v) { return fmt::format("({}, {}, {})", num(v.x), num(v.y), num(v.z)); }

std::string signs(const SignVector& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.signs.size(); ++i) {
        if (i) out += ' ';
        out += s.signs[i] > 0 ? '+' : '-';
    }
    return out + "]";
}

std::string functional_text(const AffineFunctional2& f) {
    return fmt::format("V = {}*x + {}*y + {}", num(f.grad.x), num(f.grad.y), num(f.constant));
}

std::string functional_text(const AffineFunctional3& f) {
    return fmt::format("V = {}*x + {}*y + {}*z + {}", num(f.grad.x), num(f.grad.y), num(f.grad.z), num(f.constant));
}

}  // namespace

AnalysisReport analyze(const Scene& scene, const AnalysisOptions& options) {
    AnalysisReport report;
    report.kind = scene.kind;
    report.warnings = scene.warnings;
    if (scene.kind == SceneKind::Polygon2) {
        const Polygon& polygon = *scene.polygon;
        const auto convexity = is_convex(polygon);
        report.convexity = to_string(convexity.verdict);
        if (convexity.verdict == Convexity::Concave) {
            const Partition part = partition(polygon);
            for (std::size_t i = 0; i < part.cells.size(); ++i) {
                const auto& cell = part.cells[i];
                report.cells.push_back({i, area(cell.shape), centroid(cell.shape), cell.sign_vector,
                                        classify(cell.functional, options.tol)});
            }
            report.neighbors = neighbor_check(polygon, part);
            report.oracle =
                oracle_check(polygon, part, options.samples, options.seed, options.tol, options.threads);
            report.failed = !report.neighbors->valid;
        } else {
            const auto f = functional2(polygon);
            report.classification2 = classify(f, options.tol);
            report.symmetry2 = check_corollary3(polygon);
            report.oracle = oracle_check(polygon, f, options.samples, options.seed, options.tol, options.threads);
            report.failed = !report.symmetry2->passed;
        }
    } else {
        const Polyhedron& poly = *scene.polyhedron;
        if (!is_convex(poly)) throw Error(ErrorKind::NotConvex, "polyhedron is not convex");
        report.convexity = "Convex";
        const auto f = functional3(poly);
        report.classification3 = classify(f, options.tol);
        report.symmetry3 = check_corollary4(poly, scene.symmetries);
        report.oracle = oracle_check(poly, f, options.samples, options.seed, options.tol, options.threads);
        report.failed = !report.symmetry3->passed;
    }
    report.failed = report.failed || !report.oracle.passed;
    return report;
}

std::string format_classification(const Classification2& c) {
    if (c.verdict == Verdict::CVS) return fmt::format("CVS, value {}", num(c.value));
    return fmt::format("NonCVS, direction {}", point(c.direction));
}

std::string format_classification(const Classification3& c) {
    if (c.verdict == Verdict::CVS) return fmt::format("CVS, value {}", num(c.value));
    return fmt::format("NonCVS, normal {}", point(c.direction));
}

std::string format_oracle(const OracleSummary& s) {
    return fmt::format("oracle: samples {}, seed {}, max residual {}, max scaled residual {}, tolerance {}, {}\n",
                       s.samples, s.seed, num(s.max_abs_residual), num(s.max_scaled_residual), num(s.tolerance),
                       s.passed ? "PASS" : "FAILED");
}

std::string format_partition(const Partition& part, const NeighborReport& neighbors) {
    std::string out;
    out += fmt::format("lines: {}\n", part.lines.size());
    for (std::size_t i = 0; i < part.lines.size(); ++i) {
        const auto& l = part.lines[i];
        out += fmt::format("  line {}: {}*x + {}*y + {} = 0\n", i, num(l.alpha), num(l.beta), num(l.gamma));
    }
    out += fmt::format("cells: {}\n", part.cells.size());
    for (std::size_t i = 0; i < part.cells.size(); ++i) {
        const auto& cell = part.cells[i];
        out += fmt::format("  cell {}: area {}, centroid {}, signs {}\n", i, num(area(cell.shape)),
                           point(centroid(cell.shape)), signs(cell.sign_vector));
        std::string verts;
        for (const auto& v : cell.shape.vertices()) verts += " " + point(v);
        out += fmt::format("    vertices{}\n", verts);
        out += fmt::format("    {}\n", functional_text(cell.functional));
        out += fmt::format("    {}\n", format_classification(classify(cell.functional)));
    }
    out += fmt::format("adjacency: {}\n", part.adjacency.size());
    for (const auto& a : part.adjacency) {
        out += fmt::format("  cells {} and {} across line {}, edge {} to {}\n", a.first, a.second, a.flipped_line,
                           point(a.edge_a), point(a.edge_b));
    }
    for (const auto& note : part.merge_notes) out += fmt::format("merge note: {}\n", note);
    out += fmt::format("neighbor check: {}\n", neighbors.valid ? "PASS" : "FAILED");
    for (const auto& v : neighbors.violations) out += fmt::format("  violation: {}\n", v);
    return out;
}

std::string format_symmetry(const Corollary3Check& c) {
    std::string out;
    out += fmt::format("rotations: {}\n", c.symmetries.rotations.size());
    for (const auto& r : c.symmetries.rotations) {
        out += fmt::format("  rotation about {} by {}\n", point(r.center), num(r.angle));
    }
    out += fmt::format("reflections: {}\n", c.symmetries.reflections.size());
    for (const auto& r : c.symmetries.reflections) {
        out += fmt::format("  reflection through {} along {}\n", point(r.center), point(r.axis));
    }
    out += fmt::format("prediction: {}\n", to_string(c.symmetries.prediction));
    out += fmt::format("classification: {}\n", format_classification(c.classification));
    if (c.axis_cosine) out += fmt::format("axis cosine: {}\n", num(*c.axis_cosine));
    out += fmt::format("check: {} ({})\n", c.passed ? "PASS" : "FAILED", c.detail);
    return out;
}

std::string format_symmetry(const Corollary4Check& c) {
    std::string out;
    out += fmt::format("prediction: {}\n", to_string(c.prediction));
    for (std::size_t i : c.invalid_declarations) out += fmt::format("  declaration {} is not a symmetry\n", i);
    out += fmt::format("classification: {}\n", format_classification(c.classification));
    out += fmt::format("check: {} ({})\n", c.passed ? "PASS" : "FAILED", c.detail);
    return out;
}

std::string format_report(const AnalysisReport& r) {
    std::string out;
    if (r.classification2) {
        out += fmt::format("{}, {}\n", r.convexity, format_classification(*r.classification2));
    } else if (r.classification3) {
        out += fmt::format("{}, {}\n", r.convexity, format_classification(*r.classification3));
    } else {
        out += fmt::format("{}, {} cells\n", r.convexity, r.cells.size());
    }
    out += fmt::format("kind: {}\n", to_string(r.kind));
    for (const auto& w : r.warnings) out += fmt::format("warning: {}\n", w);
    if (r.classification2) out += functional_text(r.classification2->functional) + "\n";
    if (r.classification3) out += functional_text(r.classification3->functional) + "\n";
    for (const auto& cell : r.cells) {
        out += fmt::format("cell {}: area {}, centroid {}, signs {}, {}\n", cell.index, num(cell.area),
                           point(cell.centroid), signs(cell.sign_vector), format_classification(cell.classification));
        out += fmt::format("  {}\n", functional_text(cell.classification.functional));
    }
    if (r.neighbors) out += fmt::format("neighbor check: {}\n", r.neighbors->valid ? "PASS" : "FAILED");
    if (r.symmetry2) {
        out += fmt::format("symmetry: {} rotation(s), {} reflection(s), prediction {}, {}\n",
                           r.symmetry2->symmetries.rotations.size(), r.symmetry2->symmetries.reflections.size(),
                           to_string(r.symmetry2->symmetries.prediction), r.symmetry2->passed ? "PASS" : "FAILED");
    }
    if (r.symmetry3) {
        out += fmt::format("symmetry: prediction {}, {} invalid declaration(s), {}\n",
                           to_string(r.symmetry3->prediction), r.symmetry3->invalid_declarations.size(),
                           r.symmetry3->passed ? "PASS" : "FAILED");
    }
    out += format_oracle(r.oracle);
    out += fmt::format("status: {}\n", r.failed ? "FAILED" : "OK");
    return out;
}

}  // namespace isosum
