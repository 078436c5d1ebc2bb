#pragma once

#include "isosum/functional.hpp"
#include "isosum/geometry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace isosum {

/// Side of every distinct boundary line on which a cell lies: the sign of
/// alpha*x + beta*y + gamma over the open cell (+1 or -1).
struct SignVector {
    std::vector<int> signs;

    std::size_t differing_entries(const SignVector& other) const;
    friend bool operator==(const SignVector&, const SignVector&) = default;
};

struct PartitionCell {
    Polygon shape;
    SignVector sign_vector;
    AffineFunctional2 functional;
};

struct Adjacency {
    std::size_t first = 0;
    std::size_t second = 0;
    /// Index into Partition::lines of the line carrying the shared edge.
    std::size_t flipped_line = 0;
    Point2 edge_a;
    Point2 edge_b;
};

struct Partition {
    /// Distinct carrier lines, in order of first appearance along the edges.
    std::vector<BoundaryLine> lines;
    /// edge_line[i] is the index in `lines` of the carrier of polygon edge i.
    std::vector<std::size_t> edge_line;
    /// Cells sorted by centroid (x, then y).
    std::vector<PartitionCell> cells;
    std::vector<Adjacency> adjacency;
    /// Same-sign merges that were rejected because the union was not convex.
    std::vector<std::string> merge_notes;
};

/// Convex cells of a concave polygon cut out by the arrangement of its
/// boundary lines. The input is normalized first. Throws NotConcave for
/// convex input.
Partition partition(const Polygon& polygon);

/// The split-functional component of `cell`: every edge's distance term with
/// the sign taken from the cell's sign vector.
AffineFunctional2 cell_functional(const Polygon& polygon, const Partition& partition, const PartitionCell& cell);

/// Unions adjacent cells whose sign vectors coincide when the union is still
/// convex; rejected merges are recorded in `notes`.
std::vector<PartitionCell> merge_same_sign_cells(std::vector<PartitionCell> cells, std::vector<std::string>* notes);

/// Shared positive-length edges between cells, tagged with their carrier line.
std::vector<Adjacency> find_adjacency(const std::vector<PartitionCell>& cells, const std::vector<BoundaryLine>& lines);

struct NeighborPair {
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t flipped_line = 0;
    std::size_t differing_entries = 0;
    double functional_mismatch = 0.0;
};

struct NeighborReport {
    bool valid = true;
    std::vector<NeighborPair> pairs;
    std::vector<std::string> violations;
};

/// Adjacent cells must differ in exactly the flipped line's sign, and their
/// functionals must differ by twice that line's distance terms.
NeighborReport neighbor_check(const Polygon& polygon, const Partition& partition);

struct Triple {
    Point2 p;
    Point2 q1;
    Point2 q2;
};

/// Three non-collinear points with equal distance sums: a point on an interior
/// cell edge and one step along each neighbouring cell's isosum direction.
Triple equal_sum_triple(const Polygon& polygon);
Triple equal_sum_triple(const Polygon& polygon, const Partition& partition);

/// Direct distance sum to every boundary line (the concave-polygon oracle).
double direct_distance_sum(const Polygon& polygon, Point2 p);

/// Index of the cell whose closure holds p, or cells.size() if none does.
std::size_t locate_cell(const Partition& partition, Point2 p);

}  // namespace isosum
