#include "isosum/oracle.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <thread>
#include <vector>

namespace isosum {

namespace {

constexpr int kMaxRejections = 100000;

struct Residual {
    double abs = 0.0;
    double scaled = 0.0;
};

// Residual of sample i, for i in [0, samples), reduced with max over threads.
OracleSummary run_samples(std::size_t samples, std::uint64_t seed, double tol, unsigned threads,
                          const std::function<Residual(std::uint64_t)>& residual_of) {
    threads = std::max(1u, threads);
    std::vector<Residual> partial(threads);
    auto work = [&](unsigned t) {
        Residual worst;
        for (std::size_t i = t; i < samples; i += threads) {
            const Residual r = residual_of(seed + i);
            worst.abs = std::max(worst.abs, r.abs);
            worst.scaled = std::max(worst.scaled, r.scaled);
        }
        partial[t] = worst;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    OracleSummary summary;
    summary.samples = samples;
    summary.seed = seed;
    summary.tolerance = tol;
    for (const auto& r : partial) {
        summary.max_abs_residual = std::max(summary.max_abs_residual, r.abs);
        summary.max_scaled_residual = std::max(summary.max_scaled_residual, r.scaled);
    }
    summary.passed = summary.max_scaled_residual <= tol;
    return summary;
}

Residual residual(double affine, double direct) {
    const double abs = std::abs(affine - direct);
    return {abs, abs / (1.0 + std::abs(direct))};
}

}  // namespace

Point2 sample_interior(const Polygon& polygon, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto box = bounding_box(polygon);
    std::uniform_real_distribution<double> ux(box.min.x, box.max.x);
    std::uniform_real_distribution<double> uy(box.min.y, box.max.y);
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        const Point2 p{ux(rng), uy(rng)};
        if (contains(polygon, p) == Location::Inside) return p;
    }
    throw Error(ErrorKind::DegenerateInput, "could not sample an interior point");
}

Point3 sample_interior(const Polyhedron& poly, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto box = bounding_box(poly);
    std::uniform_real_distribution<double> ux(box.min.x, box.max.x);
    std::uniform_real_distribution<double> uy(box.min.y, box.max.y);
    std::uniform_real_distribution<double> uz(box.min.z, box.max.z);
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        const Point3 p{ux(rng), uy(rng), uz(rng)};
        if (contains(poly, p) == Location::Inside) return p;
    }
    throw Error(ErrorKind::DegenerateInput, "could not sample an interior point");
}

OracleSummary oracle_check(const Polygon& convex, const AffineFunctional2& f, std::size_t samples,
                           std::uint64_t seed, double tol, unsigned threads) {
    return run_samples(samples, seed, tol, threads, [&](std::uint64_t s) {
        const Point2 p = sample_interior(convex, s);
        return residual(f(p), distance_profile(convex, p).total);
    });
}

OracleSummary oracle_check(const Polyhedron& poly, const AffineFunctional3& f, std::size_t samples,
                           std::uint64_t seed, double tol, unsigned threads) {
    if (!is_convex(poly)) throw Error(ErrorKind::NotConvex, "polyhedron is not convex");
    return run_samples(samples, seed, tol, threads, [&](std::uint64_t s) {
        const Point3 p = sample_interior(poly, s);
        return residual(f(p), distance_profile(poly, p).total);
    });
}

OracleSummary oracle_check(const Polygon& concave, const Partition& partition, std::size_t samples,
                           std::uint64_t seed, double tol, unsigned threads) {
    return run_samples(samples, seed, tol, threads, [&](std::uint64_t s) {
        const Point2 p = sample_interior(concave, s);
        const std::size_t cell = locate_cell(partition, p);
        if (cell == partition.cells.size()) {
            // A sample no cell covers is a partition defect; score it as a failure.
            return Residual{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
        }
        return residual(partition.cells[cell].functional(p), direct_distance_sum(concave, p));
    });
}

}  // namespace isosum
