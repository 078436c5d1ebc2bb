#include "isosum/partition.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include <fmt/format.h>

namespace isosum {

std::size_t SignVector::differing_entries(const SignVector& other) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < signs.size() && i < other.signs.size(); ++i) {
        if (signs[i] != other.signs[i]) ++count;
    }
    return count + (signs.size() > other.signs.size() ? signs.size() - other.signs.size()
                                                      : other.signs.size() - signs.size());
}

namespace {

using Ring = std::vector<Point2>;

double ring_area(const Ring& ring) {
    double twice = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) twice += cross(ring[i], ring[(i + 1) % ring.size()]);
    return 0.5 * twice;
}

std::pair<Ring, Ring> split(const Ring& cell, const BoundaryLine& line) {
    const auto n = cell.size();
    std::vector<double> s(n);
    std::vector<int> side(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = line.eval(cell[i]);
        side[i] = s[i] > kTol ? 1 : (s[i] < -kTol ? -1 : 0);
    }
    Ring pos;
    Ring neg;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (side[i] >= 0) pos.push_back(cell[i]);
        if (side[i] <= 0) neg.push_back(cell[i]);
        if (side[i] * side[j] < 0) {
            const Point2 x = cell[i] + (s[i] / (s[i] - s[j])) * (cell[j] - cell[i]);
            pos.push_back(x);
            neg.push_back(x);
        }
    }
    return {std::move(pos), std::move(neg)};
}

// Drops repeated points and straight-through vertices so the ring satisfies
// the Polygon invariants.
Ring clean(Ring ring) {
    bool changed = true;
    while (changed && ring.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Point2& prev = ring[(i + ring.size() - 1) % ring.size()];
            const Point2& cur = ring[i];
            const Point2& next = ring[(i + 1) % ring.size()];
            const bool duplicate = distance(prev, cur) <= kTol;
            const double scale = norm(cur - prev) * norm(next - cur);
            const bool straight = !duplicate && scale > 0.0 && std::abs(cross(cur - prev, next - cur)) <= kTol * scale;
            if (duplicate || straight) {
                ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return ring;
}

Ring convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    if (pts.size() < 3) return pts;
    Ring hull(2 * pts.size());
    std::size_t k = 0;
    auto turn = [](Point2 o, Point2 a, Point2 b) {
        const double scale = std::max(norm(a - o) * norm(b - o), 1e-300);
        return cross(a - o, b - o) / scale;
    };
    for (const auto& p : pts) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= kTol) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= kTol) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool shared_edge(const Polygon& a, const Polygon& b, Point2* ea, Point2* eb) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto [p, q] = a.edge(i);
        const double len = distance(p, q);
        const Vec2 u = (q - p) / len;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto [c, d] = b.edge(j);
            if (point_line_distance(c, p, q) > kTol || point_line_distance(d, p, q) > kTol) continue;
            const double tc = dot(c - p, u);
            const double td = dot(d - p, u);
            const double lo = std::max(0.0, std::min(tc, td));
            const double hi = std::min(len, std::max(tc, td));
            if (hi - lo > kTol) {
                if (ea) *ea = p + lo * u;
                if (eb) *eb = p + hi * u;
                return true;
            }
        }
    }
    return false;
}

bool centroid_less(const PartitionCell& a, const PartitionCell& b) {
    const Point2 ca = centroid(a.shape);
    const Point2 cb = centroid(b.shape);
    if (std::abs(ca.x - cb.x) > kTol) return ca.x < cb.x;
    return ca.y < cb.y;
}

// Index of the partition line carrying edge (a, b) of `polygon`.
std::size_t line_of(const std::vector<BoundaryLine>& lines, Point2 a, Point2 b) {
    const BoundaryLine carrier = carrier_line(a, b);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (same_line(lines[k], carrier)) return k;
    }
    throw Error(ErrorKind::ValidationError, "polygon edge does not lie on any partition line");
}

AffineFunctional2 functional_from_signs(const std::vector<BoundaryLine>& lines,
                                        const std::vector<std::size_t>& edge_line, const SignVector& signs) {
    AffineFunctional2 f;
    for (auto k : edge_line) {
        const int s = signs.signs.at(k);
        f.grad += s * lines[k].normal();
        f.constant += s * lines[k].gamma;
    }
    f.terms = edge_line.size();
    return f;
}

double inradius_estimate(const Polygon& shape) { return 2.0 * area(shape) / perimeter(shape); }

}  // namespace

double direct_distance_sum(const Polygon& polygon, Point2 p) {
    double total = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto [a, b] = polygon.edge(i);
        total += point_line_distance(p, a, b);
    }
    return total;
}

std::vector<PartitionCell> merge_same_sign_cells(std::vector<PartitionCell> cells, std::vector<std::string>* notes) {
    std::set<std::pair<std::size_t, std::size_t>> rejected;
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < cells.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < cells.size() && !merged; ++j) {
                if (!(cells[i].sign_vector == cells[j].sign_vector)) continue;
                if (!shared_edge(cells[i].shape, cells[j].shape, nullptr, nullptr)) continue;
                if (rejected.contains({i, j})) continue;
                std::vector<Point2> pts = cells[i].shape.vertices();
                pts.insert(pts.end(), cells[j].shape.vertices().begin(), cells[j].shape.vertices().end());
                Ring hull = convex_hull(std::move(pts));
                const double parts = area(cells[i].shape) + area(cells[j].shape);
                if (hull.size() >= 3 && std::abs(ring_area(hull) - parts) <= kTol * std::max(1.0, parts)) {
                    cells[i].shape = Polygon(std::move(hull));
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(j));
                    rejected.clear();
                    merged = true;
                } else {
                    rejected.insert({i, j});
                    if (notes) {
                        notes->push_back(fmt::format(
                            "cells {} and {} share a sign vector but their union is not convex; kept separate", i, j));
                    }
                }
            }
        }
    }
    return cells;
}

std::vector<Adjacency> find_adjacency(const std::vector<PartitionCell>& cells, const std::vector<BoundaryLine>& lines) {
    std::vector<Adjacency> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            Point2 a;
            Point2 b;
            if (!shared_edge(cells[i].shape, cells[j].shape, &a, &b)) continue;
            std::size_t best = 0;
            double best_err = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < lines.size(); ++k) {
                const double err = std::abs(lines[k].eval(a)) + std::abs(lines[k].eval(b));
                if (err < best_err) {
                    best_err = err;
                    best = k;
                }
            }
            out.push_back({i, j, best, a, b});
        }
    }
    return out;
}

Partition partition(const Polygon& input) {
    const Polygon polygon = normalize(input);
    const auto convexity = is_convex(polygon);
    if (convexity.verdict == Convexity::Degenerate) throw Error(ErrorKind::DegenerateInput, "degenerate polygon");
    if (convexity.verdict == Convexity::Convex) {
        throw Error(ErrorKind::NotConcave, "convex polygon has a single global functional; use functional2");
    }

    Partition result;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto [a, b] = polygon.edge(i);
        const BoundaryLine line = carrier_line(a, b);
        std::size_t k = 0;
        while (k < result.lines.size() && !same_line(result.lines[k], line)) ++k;
        if (k == result.lines.size()) result.lines.push_back(line);
        result.edge_line.push_back(k);
    }

    const auto box = bounding_box(polygon);
    const double diag = box.diagonal();
    const double margin = 0.05 * diag;
    std::vector<Ring> rings{{{box.min.x - margin, box.min.y - margin},
                             {box.max.x + margin, box.min.y - margin},
                             {box.max.x + margin, box.max.y + margin},
                             {box.min.x - margin, box.max.y + margin}}};
    const double min_area = 1e-12 * diag * diag;
    for (const auto& line : result.lines) {
        std::vector<Ring> next;
        for (const auto& ring : rings) {
            auto [pos, neg] = split(ring, line);
            for (auto* part : {&pos, &neg}) {
                if (part->size() >= 3 && std::abs(ring_area(*part)) > min_area) next.push_back(std::move(*part));
            }
        }
        rings = std::move(next);
    }

    std::vector<PartitionCell> cells;
    for (auto& ring : rings) {
        Ring cleaned = clean(std::move(ring));
        if (cleaned.size() < 3) continue;
        Polygon shape(std::move(cleaned));
        const Point2 c = centroid(shape);
        if (contains(polygon, c) != Location::Inside) continue;
        SignVector sv;
        for (const auto& line : result.lines) sv.signs.push_back(line.eval(c) > 0.0 ? 1 : -1);
        AffineFunctional2 f = functional_from_signs(result.lines, result.edge_line, sv);
        cells.push_back({std::move(shape), std::move(sv), f});
    }

    cells = merge_same_sign_cells(std::move(cells), &result.merge_notes);
    std::sort(cells.begin(), cells.end(), centroid_less);
    result.cells = std::move(cells);
    result.adjacency = find_adjacency(result.cells, result.lines);
    return result;
}

AffineFunctional2 cell_functional(const Polygon& polygon, const Partition& partition, const PartitionCell& cell) {
    std::vector<std::size_t> edge_line;
    edge_line.reserve(polygon.size());
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto [a, b] = polygon.edge(i);
        edge_line.push_back(line_of(partition.lines, a, b));
    }
    return functional_from_signs(partition.lines, edge_line, cell.sign_vector);
}

NeighborReport neighbor_check(const Polygon& polygon, const Partition& partition) {
    NeighborReport report;
    std::vector<std::size_t> multiplicity(partition.lines.size(), 0);
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto [a, b] = polygon.edge(i);
        ++multiplicity[line_of(partition.lines, a, b)];
    }
    for (const auto& adj : partition.adjacency) {
        const auto& ci = partition.cells[adj.first];
        const auto& cj = partition.cells[adj.second];
        NeighborPair pair{adj.first, adj.second, adj.flipped_line,
                          ci.sign_vector.differing_entries(cj.sign_vector), 0.0};
        const std::size_t k = adj.flipped_line;
        const BoundaryLine& line = partition.lines[k];
        const double factor = static_cast<double>(multiplicity[k]) *
                              (ci.sign_vector.signs[k] - cj.sign_vector.signs[k]);
        const Vec2 dgrad = ci.functional.grad - cj.functional.grad - factor * line.normal();
        const double dconst = ci.functional.constant - cj.functional.constant - factor * line.gamma;
        pair.functional_mismatch = std::max({std::abs(dgrad.x), std::abs(dgrad.y), std::abs(dconst)});

        if (pair.differing_entries != 1) {
            report.violations.push_back(fmt::format("cells {} and {} differ in {} sign entries", adj.first,
                                                    adj.second, pair.differing_entries));
        } else if (ci.sign_vector.signs[k] == cj.sign_vector.signs[k]) {
            report.violations.push_back(fmt::format("cells {} and {} agree on line {} that carries their shared edge",
                                                    adj.first, adj.second, k));
        }
        if (pair.functional_mismatch > kTol * static_cast<double>(polygon.size())) {
            report.violations.push_back(fmt::format("cells {} and {}: functionals differ by more than the flipped term "
                                                    "(mismatch {:.3e})",
                                                    adj.first, adj.second, pair.functional_mismatch));
        }
        report.pairs.push_back(pair);
    }
    report.valid = report.violations.empty();
    return report;
}

std::size_t locate_cell(const Partition& partition, Point2 p) {
    for (std::size_t i = 0; i < partition.cells.size(); ++i) {
        if (contains(partition.cells[i].shape, p) != Location::Outside) return i;
    }
    return partition.cells.size();
}

Triple equal_sum_triple(const Polygon& polygon) {
    const auto convexity = is_convex(polygon);
    if (convexity.verdict != Convexity::Concave) {
        throw Error(ErrorKind::NotConcave, "equal-sum triples off a single line exist only for concave polygons");
    }
    return equal_sum_triple(polygon, partition(polygon));
}

Triple equal_sum_triple(const Polygon& polygon, const Partition& partition) {
    const double diag = bounding_box(polygon).diagonal();
    for (const auto& adj : partition.adjacency) {
        const auto& ci = partition.cells[adj.first];
        const auto& cj = partition.cells[adj.second];
        const Point2 p = 0.5 * (adj.edge_a + adj.edge_b);
        const Vec2 n = partition.lines[adj.flipped_line].normal();

        // Unit step into `cell` along its isosum direction, or none when that
        // direction runs along the shared edge.
        auto step_into = [&](const PartitionCell& cell, Point2* out) {
            const Vec2 inward = cell.sign_vector.signs[adj.flipped_line] * n;
            const auto c = classify(cell.functional);
            Vec2 d = c.verdict == Verdict::CVS ? inward : c.direction;
            if (std::abs(dot(d, inward)) <= 1e-6) return false;
            if (dot(d, inward) < 0.0) d = -d;
            double t = 1e-3 * inradius_estimate(cell.shape);
            for (int attempt = 0; attempt < 60; ++attempt, t *= 0.5) {
                const Point2 q = p + t * d;
                if (contains(cell.shape, q) == Location::Inside && contains(polygon, q) == Location::Inside) {
                    *out = q;
                    return true;
                }
            }
            return false;
        };

        Triple triple{p, {}, {}};
        if (!step_into(ci, &triple.q1) || !step_into(cj, &triple.q2)) continue;
        const double vp = direct_distance_sum(polygon, triple.p);
        const double v1 = direct_distance_sum(polygon, triple.q1);
        const double v2 = direct_distance_sum(polygon, triple.q2);
        const double tri_area = 0.5 * std::abs(cross(triple.q1 - triple.p, triple.q2 - triple.p));
        if (sums_equal(vp, v1) && sums_equal(vp, v2) && sums_equal(v1, v2) && tri_area > 1e-12 * diag * diag) {
            return triple;
        }
    }
    throw Error(ErrorKind::NoInteriorEdge, "no pair of neighbouring cells with transversal isosum directions");
}

}  // namespace isosum
