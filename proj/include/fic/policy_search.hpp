#ifndef FIC_POLICY_SEARCH_HPP
#define FIC_POLICY_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "fic/bounds.hpp"
#include "fic/csit.hpp"
#include "fic/ensemble.hpp"
#include "fic/geometry.hpp"
#include "fic/policy.hpp"

namespace fic {

// Discretization of the policy unions. Power candidates per CSIT symbol are
// multiples of power_step * P up to cap * P, filtered by the budget
// expectation; splits run over the split_step grid on [0, 1].
struct PolicyGrid {
    double power_step = 0.25;
    double split_step = 0.25;
    double cap = 4.0;  // per-symbol cap as a multiple of the budget
};

// Every grid power policy with E[phi(E)] <= P + 1e-9, in deterministic
// enumeration order. Always contains the uniform full-power policy phi == P.
std::vector<PowerPolicy> feasible_power_policies(const StateEnsemble& ensemble,
                                                 const CsitMap& csit, double budget,
                                                 const PolicyGrid& grid);

// The interference-aware split assignment: per CSIT symbol e,
// alpha(e) = min{1, 1/(g21^2 phi1(e))} with the symbol's (unique) cross gain,
// and alpha(e) = 1 where g21^2 phi1(e) = 0; symmetrically for beta with g12.
// Requires each CSIT map to determine its own cross gain (HypothesisError
// otherwise). Keeps private interference at or below the noise floor.
std::pair<SplitPolicy, SplitPolicy> etw_split_policy(const StateEnsemble& ensemble,
                                                     const PowerPolicy& phi1,
                                                     const PowerPolicy& phi2);

enum class BoundKind { InnerEq2, OuterEq18, OuterEq45 };

std::string bound_kind_name(BoundKind kind);

struct SearchOptions {
    int refine_rounds = 0;   // coordinate-ascent rounds after the grid sweep
    bool iid_split_restriction = false;  // Eq18 only: alpha from (g22, E2), beta from (g11, E1)
    int threads = 1;
};

struct SearchResult {
    RatePolytope polytope;
    PowerPolicy phi1;
    PowerPolicy phi2;
    std::optional<SplitPolicy> alpha;  // absent for the relaxed outer bound
    std::optional<SplitPolicy> beta;
    double value = 0.0;
};

// Exhaustive grid sweep of the policy union followed by optional rounds of
// single-coordinate golden-section refinement, maximizing w1*R1 + w2*R2.
// Ties break to the first candidate in enumeration order.
SearchResult maximize_weighted_sum(BoundKind kind, const StateEnsemble& ensemble,
                                   const CsitMap& csit1, const CsitMap& csit2,
                                   const Budget& budget, double w1, double w2,
                                   const PolicyGrid& grid, const SearchOptions& options = {});

// Direction sweep over [0, pi/2]; the region members are the distinct argmax
// polytopes and the support cache is filled from the same sweep.
RateRegion trace_boundary(BoundKind kind, const StateEnsemble& ensemble, const CsitMap& csit1,
                          const CsitMap& csit2, const Budget& budget, int direction_count,
                          const PolicyGrid& grid, const SearchOptions& options = {});

// Same sweep, keeping the argmax policies aligned with region.members for
// report export.
struct TracedBound {
    RateRegion region;
    std::vector<SearchResult> member_policies;
};

TracedBound trace_boundary_detailed(BoundKind kind, const StateEnsemble& ensemble,
                                    const CsitMap& csit1, const CsitMap& csit2,
                                    const Budget& budget, int direction_count,
                                    const PolicyGrid& grid, const SearchOptions& options = {});

}  // namespace fic

#endif
