#include "fic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "fic/errors.hpp"

namespace fic {

namespace {

struct Line {
    double a, b, c;  // a*x + b*y = c
};

bool feasible(const RatePolytope& polytope, double x, double y, double tol) {
    if (x < -tol || y < -tol) return false;
    for (const RateConstraint& rc : polytope.constraints)
        if (rc.a * x + rc.b * y > rc.c + tol) return false;
    return true;
}

bool has_r1_cap(const RatePolytope& p) {
    for (const RateConstraint& rc : p.constraints)
        if (rc.a > 0) return true;
    return false;
}

bool has_r2_cap(const RatePolytope& p) {
    for (const RateConstraint& rc : p.constraints)
        if (rc.b > 0) return true;
    return false;
}

// Feasible pairwise line intersections (constraint lines plus both axes).
// With coefficients confined to the five nonnegative directions, every
// extreme point of {R >= 0 : constraints} appears here, and every feasible
// intersection of two independent lines is extreme.
std::vector<RatePoint> candidate_vertices(const RatePolytope& polytope) {
    std::vector<Line> lines;
    lines.reserve(polytope.constraints.size() + 2);
    for (const RateConstraint& rc : polytope.constraints)
        lines.push_back({static_cast<double>(rc.a), static_cast<double>(rc.b), rc.c});
    lines.push_back({1.0, 0.0, 0.0});
    lines.push_back({0.0, 1.0, 0.0});

    std::vector<RatePoint> points;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (std::abs(det) < 1e-12) continue;
            const double x = (lines[i].c * lines[j].b - lines[j].c * lines[i].b) / det;
            const double y = (lines[i].a * lines[j].c - lines[j].a * lines[i].c) / det;
            if (!feasible(polytope, x, y, kGeometryTol)) continue;
            // + 0.0 normalizes -0 from the determinant arithmetic
            points.push_back(RatePoint{std::max(x, 0.0) + 0.0, std::max(y, 0.0) + 0.0});
        }
    }

    std::sort(points.begin(), points.end(), [](const RatePoint& u, const RatePoint& v) {
        if (u.r1 != v.r1) return u.r1 < v.r1;
        return u.r2 > v.r2;
    });
    std::vector<RatePoint> dedup;
    for (const RatePoint& p : points) {
        bool seen = false;
        for (const RatePoint& q : dedup)
            if (std::abs(p.r1 - q.r1) <= kGeometryTol && std::abs(p.r2 - q.r2) <= kGeometryTol) {
                seen = true;
                break;
            }
        if (!seen) dedup.push_back(p);
    }
    return dedup;
}

}  // namespace

bool polytope_contains(const RatePolytope& polytope, const RatePoint& p, double tol) {
    return feasible(polytope, p.r1, p.r2, tol);
}

std::vector<RatePoint> vertices(const RatePolytope& polytope) {
    if (!has_r1_cap(polytope) || !has_r2_cap(polytope))
        throw UnboundedRegionError("vertices: polytope is unbounded");
    return candidate_vertices(polytope);
}

double support_value(const RatePolytope& polytope, double w1, double w2) {
    if (!std::isfinite(w1) || !std::isfinite(w2) || w1 < 0.0 || w2 < 0.0 ||
        (w1 == 0.0 && w2 == 0.0))
        throw std::invalid_argument("support_value: direction must be nonnegative and nonzero");
    if ((w1 > 0.0 && !has_r1_cap(polytope)) || (w2 > 0.0 && !has_r2_cap(polytope)))
        throw UnboundedRegionError("support_value: unbounded direction");
    double best = 0.0;  // origin is always feasible
    for (const RatePoint& v : candidate_vertices(polytope))
        best = std::max(best, w1 * v.r1 + w2 * v.r2);
    return best;
}

std::vector<double> direction_grid(int direction_count) {
    if (direction_count < 2)
        throw std::invalid_argument("direction_grid: need at least 2 directions");
    std::vector<double> angles(static_cast<std::size_t>(direction_count));
    const double half_pi = 2.0 * std::atan(1.0);
    for (int j = 0; j < direction_count; ++j)
        angles[static_cast<std::size_t>(j)] =
            half_pi * static_cast<double>(j) / static_cast<double>(direction_count - 1);
    return angles;
}

RateRegion union_region(std::vector<RatePolytope> members, int direction_count) {
    if (members.empty()) throw std::invalid_argument("union_region: no members");
    if (direction_count < 4)
        throw std::invalid_argument("union_region: need at least 4 directions");
    for (const RatePolytope& m : members)
        if (!has_r1_cap(m) || !has_r2_cap(m))
            throw UnboundedRegionError("union_region: unbounded member");

    RateRegion region;
    region.members = std::move(members);
    region.angles = direction_grid(direction_count);
    region.support.resize(region.angles.size());
    region.achieving_member.resize(region.angles.size());

    // One vertex enumeration per member; the sweep is then a max-reduction.
    std::vector<std::vector<RatePoint>> member_vertices;
    member_vertices.reserve(region.members.size());
    for (const RatePolytope& m : region.members) member_vertices.push_back(candidate_vertices(m));

    for (std::size_t j = 0; j < region.angles.size(); ++j) {
        const double w1 = std::cos(region.angles[j]);
        const double w2 = std::sin(region.angles[j]);
        double best = 0.0;
        int best_member = 0;
        for (std::size_t m = 0; m < region.members.size(); ++m) {
            double s = 0.0;
            for (const RatePoint& v : member_vertices[m])
                s = std::max(s, w1 * v.r1 + w2 * v.r2);
            if (s > best) {
                best = s;
                best_member = static_cast<int>(m);
            }
        }
        region.support[j] = best;
        region.achieving_member[j] = best_member;
    }
    return region;
}

bool contains_point(const RateRegion& region, const RatePoint& p, double tol) {
    for (const RatePolytope& m : region.members)
        if (polytope_contains(m, p, tol)) return true;
    return false;
}

ShiftedContainmentReport shifted_containment(const RatePolytope& outer,
                                             const RatePolytope& inner, double delta) {
    if (!(delta >= 0.0))
        throw std::invalid_argument("shifted_containment: delta must be >= 0");
    ShiftedContainmentReport report;
    report.pass = true;
    report.worst_violation = -std::numeric_limits<double>::infinity();
    for (const RatePoint& v : vertices(outer)) {
        ShiftedVertexRecord rec;
        rec.vertex = v;
        rec.shifted = RatePoint{std::max(v.r1 - delta, 0.0), std::max(v.r2 - delta, 0.0)};
        double violation = 0.0;
        for (const RateConstraint& rc : inner.constraints)
            violation = std::max(violation, rc.a * rec.shifted.r1 + rc.b * rec.shifted.r2 - rc.c);
        rec.violation = violation;
        rec.contained = violation <= kGeometryTol;
        if (!rec.contained) report.pass = false;
        if (violation > report.worst_violation) {
            report.worst_violation = violation;
            report.worst_index = report.records.size();
        }
        report.records.push_back(rec);
    }
    return report;
}

}  // namespace fic
