#ifndef FIC_GEOMETRY_HPP
#define FIC_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "fic/polytope.hpp"

namespace fic {

struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;
};

inline constexpr double kGeometryTol = 1e-9;

// All comparisons in this module are absolute at kGeometryTol; rates are
// O(1..10) bits at desk scale.

bool polytope_contains(const RatePolytope& polytope, const RatePoint& p,
                       double tol = kGeometryTol);

// Extreme points of {R >= 0 : constraints}, deduplicated at kGeometryTol and
// sorted by increasing r1 (r2 descending on ties). Throws UnboundedRegionError
// if the region is unbounded. Closed form: with coefficients confined to the
// five directions, every vertex is a pairwise line intersection or an axis
// intercept.
std::vector<RatePoint> vertices(const RatePolytope& polytope);

// max over the polytope of w1*R1 + w2*R2, exact via candidate-vertex
// enumeration. (w1, w2) != (0, 0), both >= 0; throws UnboundedRegionError if
// the direction is unbounded.
double support_value(const RatePolytope& polytope, double w1, double w2);

// Union of polytope members over a direction grid of D evenly spaced angles
// spanning [0, pi/2]. Membership stays member-wise (the exact, generally
// non-convex union); the cached support describes the convex hull, i.e. the
// time-sharing closure.
struct RateRegion {
    std::vector<RatePolytope> members;
    std::vector<double> angles;        // radians, size D
    std::vector<double> support;       // hull support per direction
    std::vector<int> achieving_member; // argmax member per direction
};

RateRegion union_region(std::vector<RatePolytope> members, int direction_count);

std::vector<double> direction_grid(int direction_count);

bool contains_point(const RateRegion& region, const RatePoint& p, double tol = kGeometryTol);

// Checks that every vertex v of `outer`, shifted down by delta per component
// and clamped at 0, lies inside `inner`.
struct ShiftedVertexRecord {
    RatePoint vertex;
    RatePoint shifted;
    double violation = 0.0;  // max over inner constraints of a*p1+b*p2-c
    bool contained = false;
};

struct ShiftedContainmentReport {
    bool pass = false;
    double worst_violation = 0.0;
    std::size_t worst_index = 0;  // into records
    std::vector<ShiftedVertexRecord> records;
};

ShiftedContainmentReport shifted_containment(const RatePolytope& outer,
                                             const RatePolytope& inner, double delta);

}  // namespace fic

#endif
