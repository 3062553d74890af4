#include "fic/polytope.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fic {

RateConstraint make_rate_constraint(int a, int b, double c, std::string tag) {
    const bool known = (a == 1 && b == 0) || (a == 0 && b == 1) || (a == 1 && b == 1) ||
                       (a == 2 && b == 1) || (a == 1 && b == 2);
    if (!known)
        throw std::invalid_argument("RateConstraint: coefficients must be one of "
                                    "(1,0),(0,1),(1,1),(2,1),(1,2)");
    if (!std::isfinite(c)) throw std::invalid_argument("RateConstraint: bound must be finite");
    // Bounds are sums of psi values and nonnegative differences; anything
    // below a rounding ulp of zero is a caller bug.
    if (c < -1e-9) throw std::invalid_argument("RateConstraint: negative bound " + tag);
    return RateConstraint{a, b, std::max(c, 0.0), std::move(tag)};
}

RatePolytope make_rate_polytope(std::vector<RateConstraint> constraints, std::string bound_name) {
    if (constraints.empty()) throw std::invalid_argument("RatePolytope: no constraints");
    return RatePolytope{std::move(constraints), std::move(bound_name)};
}

const RateConstraint* find_constraint(const RatePolytope& polytope, const std::string& tag) {
    for (const RateConstraint& rc : polytope.constraints)
        if (rc.tag == tag) return &rc;
    return nullptr;
}

}  // namespace fic
