#pragma once

#include "isosum/functional.hpp"
#include "isosum/partition.hpp"

#include <cstddef>
#include <cstdint>

namespace isosum {

/// Monte-Carlo comparison of an affine functional against direct distance
/// sums. Sample i is drawn from its own generator seeded with seed + i, so
/// the result does not depend on the thread count.
struct OracleSummary {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = kTol;
    double max_abs_residual = 0.0;
    /// max |affine - direct| / (1 + |direct|)
    double max_scaled_residual = 0.0;
    bool passed = true;
};

/// Uniform point strictly inside, by rejection from the bounding box.
Point2 sample_interior(const Polygon& polygon, std::uint64_t seed);
Point3 sample_interior(const Polyhedron& poly, std::uint64_t seed);

OracleSummary oracle_check(const Polygon& convex, const AffineFunctional2& f, std::size_t samples,
                           std::uint64_t seed, double tol = kTol, unsigned threads = 1);
OracleSummary oracle_check(const Polyhedron& poly, const AffineFunctional3& f, std::size_t samples,
                           std::uint64_t seed, double tol = kTol, unsigned threads = 1);
/// Each sample is scored against the functional of the cell that holds it.
OracleSummary oracle_check(const Polygon& concave, const Partition& partition, std::size_t samples,
                           std::uint64_t seed, double tol = kTol, unsigned threads = 1);

}  // namespace isosum
