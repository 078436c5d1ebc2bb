#pragma once

#include "isosum/functional.hpp"
#include "isosum/oracle.hpp"
#include "isosum/partition.hpp"
#include "isosum/scene.hpp"
#include "isosum/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isosum {

struct CellResult {
    std::size_t index = 0;
    double area = 0.0;
    Point2 centroid;
    SignVector sign_vector;
    Classification2 classification;
};

struct AnalysisReport {
    SceneKind kind = SceneKind::Polygon2;
    std::string convexity;
    std::optional<Classification2> classification2;
    std::optional<Classification3> classification3;
    std::vector<CellResult> cells;
    std::optional<NeighborReport> neighbors;
    std::optional<Corollary3Check> symmetry2;
    std::optional<Corollary4Check> symmetry3;
    OracleSummary oracle;
    std::vector<std::string> warnings;
    bool failed = false;
};

struct AnalysisOptions {
    double tol = kTol;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

/// Classification, partition (concave polygons), symmetry cross-check and
/// Monte-Carlo oracle in one pass. Throws NotConvex for non-convex polyhedra.
AnalysisReport analyze(const Scene& scene, const AnalysisOptions& options = {});

/// Deterministic text, 9 decimals throughout. The first line is the summary,
/// e.g. "Convex, CVS, value 2.000000000"; the last is "status: OK" or
/// "status: FAILED".
std::string format_report(const AnalysisReport& report);

std::string format_classification(const Classification2& c);
std::string format_classification(const Classification3& c);
std::string format_oracle(const OracleSummary& summary);
std::string format_partition(const Partition& partition, const NeighborReport& neighbors);
std::string format_symmetry(const Corollary3Check& check);
std::string format_symmetry(const Corollary4Check& check);

}  // namespace isosum
