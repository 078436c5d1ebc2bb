#include "isosum/cli.hpp"

#include "isosum/error.hpp"
#include "isosum/lp.hpp"
#include "isosum/render.hpp"
#include "isosum/report.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "CLI11.hpp"

namespace isosum {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Options {
    std::string file;
    std::optional<double> tol;
    int levels = 5;
    std::string out_path;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

double resolve_tol(const Options& o) {
    if (o.tol) {
        if (!(*o.tol > 0.0) || !std::isfinite(*o.tol)) {
            throw Error(ErrorKind::ValidationError, "--tol must be a positive finite number");
        }
        return *o.tol;
    }
    return tolerance_from_env().value_or(kTol);
}

const Polygon& polygon_of(const Scene& scene, const char* command) {
    if (scene.kind != SceneKind::Polygon2) {
        throw Error(ErrorKind::ValidationError, fmt::format("{} requires a polygon2 scene", command));
    }
    return *scene.polygon;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    AnalysisOptions a;
    a.tol = resolve_tol(o);
    const auto report = analyze(load_scene(o.file), a);
    out << format_report(report);
    return report.failed ? kFailed : kOk;
}

int cmd_partition(const Options& o, std::ostream& out) {
    const Scene scene = load_scene(o.file);
    const Polygon& polygon = polygon_of(scene, "partition");
    const Partition part = partition(polygon);
    const NeighborReport neighbors = neighbor_check(polygon, part);
    out << format_partition(part, neighbors);
    return neighbors.valid ? kOk : kFailed;
}

int cmd_symmetry(const Options& o, std::ostream& out) {
    const Scene scene = load_scene(o.file);
    if (scene.kind == SceneKind::Polygon2) {
        const auto check = check_corollary3(*scene.polygon);
        out << format_symmetry(check);
        return check.passed ? kOk : kFailed;
    }
    const auto check = check_corollary4(*scene.polyhedron, scene.symmetries);
    out << format_symmetry(check);
    return check.passed ? kOk : kFailed;
}

int cmd_render(const Options& o, std::ostream& out) {
    const std::string svg = render_svg(load_scene(o.file), o.levels);
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::ValidationError, fmt::format("cannot write {}", o.out_path));
    file << svg;
    file.close();
    if (!file) throw Error(ErrorKind::ValidationError, fmt::format("failed writing {}", o.out_path));
    out << fmt::format("wrote {}\n", o.out_path);
    return kOk;
}

int cmd_lp(const Options& o, std::ostream& out) {
    const Scene scene = load_scene(o.file);
    const Polygon& polygon = polygon_of(scene, "lp");
    if (polygon.size() != 3) {
        throw Error(ErrorKind::ValidationError,
                    fmt::format("lp requires a triangle, got a polygon with {} vertices", polygon.size()));
    }
    out << export_lp_text(triangle_to_lp(polygon));
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const double tol = resolve_tol(o);
    const Scene scene = load_scene(o.file);
    OracleSummary summary;
    if (scene.kind == SceneKind::Polyhedron3) {
        summary = oracle_check(*scene.polyhedron, functional3(*scene.polyhedron), o.samples, o.seed, tol, o.threads);
    } else if (is_convex(*scene.polygon).verdict == Convexity::Concave) {
        summary = oracle_check(*scene.polygon, partition(*scene.polygon), o.samples, o.seed, tol, o.threads);
    } else {
        summary = oracle_check(*scene.polygon, functional2(*scene.polygon), o.samples, o.seed, tol, o.threads);
    }
    out << format_oracle(summary);
    out << fmt::format("status: {}\n", summary.passed ? "OK" : "FAILED");
    return summary.passed ? kOk : kFailed;
}

}  // namespace

std::optional<double> tolerance_from_env() {
    const char* raw = std::getenv("ISOSUM_TOL");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        throw Error(ErrorKind::ValidationError, fmt::format("ISOSUM_TOL must be a positive number, got \"{}\"", raw));
    }
    return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance-sum functionals of polygons and convex polyhedra", "isosum"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "Scene JSON file")->required(); };
    auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", o.tol, "Tolerance (default ISOSUM_TOL or 1e-9)"); };

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify, partition and cross-check a scene");
    add_file(analyze_cmd);
    add_tol(analyze_cmd);

    auto* partition_cmd = app.add_subcommand("partition", "Convex cells of a concave polygon");
    add_file(partition_cmd);

    auto* symmetry_cmd = app.add_subcommand("symmetry", "Symmetry prediction against classification");
    add_file(symmetry_cmd);

    auto* render_cmd = app.add_subcommand("render", "SVG of isosum segments");
    add_file(render_cmd);
    render_cmd->add_option("--levels", o.levels, "Number of levels")->required()->check(CLI::PositiveNumber);
    render_cmd->add_option("--out", o.out_path, "Output SVG path")->required();

    auto* lp_cmd = app.add_subcommand("lp", "Linear program of a triangle");
    add_file(lp_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Monte-Carlo oracle check");
    add_file(verify_cmd);
    add_tol(verify_cmd);
    verify_cmd->add_option("--samples", o.samples, "Sample count")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", o.seed, "Base seed")->required();
    verify_cmd->add_option("--threads", o.threads, "Worker threads")
        ->check(CLI::Range(1u, std::max(1u, std::thread::hardware_concurrency()) * 4u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(o, out);
        if (*partition_cmd) return cmd_partition(o, out);
        if (*symmetry_cmd) return cmd_symmetry(o, out);
        if (*render_cmd) return cmd_render(o, out);
        if (*lp_cmd) return cmd_lp(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace isosum
