#ifndef FIC_POLYTOPE_HPP
#define FIC_POLYTOPE_HPP

#include <string>
#include <vector>

namespace fic {

// One half-plane a*R1 + b*R2 <= c with (a, b) from the fixed coefficient set
// {(1,0), (0,1), (1,1), (2,1), (1,2)} and c in bits. Tags are stable
// constraint identities (e.g. "Eq45-c3") used in certificates and exports.
struct RateConstraint {
    int a = 0;
    int b = 0;
    double c = 0.0;
    std::string tag;
};

RateConstraint make_rate_constraint(int a, int b, double c, std::string tag);

// Intersection of rate constraints with the nonnegative quadrant
// (R1 >= 0, R2 >= 0 implicit). One member of a policy-union rate region.
struct RatePolytope {
    std::vector<RateConstraint> constraints;
    std::string bound_name;  // "Eq2", "Eq18", "Eq45", "Eq39", "Kramer", "ETW", "Eq55"
};

RatePolytope make_rate_polytope(std::vector<RateConstraint> constraints,
                                std::string bound_name);

const RateConstraint* find_constraint(const RatePolytope& polytope, const std::string& tag);

}  // namespace fic

#endif
