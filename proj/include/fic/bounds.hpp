#ifndef FIC_BOUNDS_HPP
#define FIC_BOUNDS_HPP

#include "fic/ensemble.hpp"
#include "fic/policy.hpp"
#include "fic/polytope.hpp"
#include "fic/psi.hpp"

namespace fic {

// Closed-form rate constraints of the fading interference channel bounds.
// All rates are in bits per complex channel use. Conventions shared by every
// operation here:
//   a = g11^2 phi1, b = g12^2 phi2, c = g21^2 phi1, d = g22^2 phi2 per point;
//   receiver 1 is under weak interference where g12 < g22, receiver 2 where
//   g21 < g11; ties (>=) always go to the strong branch.

// Han-Kobayashi achievable region member at fixed power policies and
// csit-indexed private fractions alpha (tx1) and beta (tx2). Seven
// constraints, tags "Eq2-c1".."Eq2-c7".
RatePolytope inner_polytope(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                            const PowerPolicy& phi2, const SplitPolicy& alpha,
                            const SplitPolicy& beta);

// Full outer bound member with state-indexed splits. R1 and R2 are each the
// min of two expressions, emitted as separate rows ("Eq18-c1a"/"Eq18-c1b",
// "Eq18-c2a"/"Eq18-c2b") so downstream geometry reports which one binds.
// Here alpha_s weights transmitter 2's power inside receiver 1's branches
// and beta_s weights transmitter 1's power inside receiver 2's, matching the
// role the splits play in the bound.
RatePolytope outer_polytope_full(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                 const PowerPolicy& phi2, const SplitPolicy& alpha_s,
                                 const SplitPolicy& beta_s);

// Relaxed outer bound member: the split-bearing single-rate branches are
// dropped and the remaining constraints are taken at split 1. Seven rows,
// tags "Eq45-c1".."Eq45-c7". No split policies appear.
RatePolytope outer_polytope_relaxed(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                    const PowerPolicy& phi2);

// Static weak-interference reduction (direct gains 1, cross gains < 1) at
// scalar splits. Nine rows: the two single-rate mins are emitted as
// "Eq39-c1a"/"Eq39-c1b" and "Eq39-c2a"/"Eq39-c2b" plus "Eq39-c3".."Eq39-c7".
RatePolytope static_weak_outer(const ChannelState& state, const Budget& budget, double alpha,
                               double beta);

// First four constraints of the static weak reduction (rows c1a..c2b, c3,
// c4); region-equivalent to Kramer's outer bound.
RatePolytope kramer_polytope(const ChannelState& state, const Budget& budget, double alpha,
                             double beta);

// Static weak reduction at splits 1 with the two single-rate interference
// branches removed; region-equivalent to the ETW outer bound.
RatePolytope etw_weak_polytope(const ChannelState& state, const Budget& budget);

// The R1 + 2 R2 bounds of the static mixed channel (g21 < 1 <= g12):
// ours and the ETW counterpart, which exceeds ours by psi(P2/(g12^2 P2 + 1)).
struct MixedR12R2Pair {
    double ours = 0.0;
    double etw = 0.0;
};

MixedR12R2Pair mixed_r1_2r2_pair(const ChannelState& state, const Budget& budget);

}  // namespace fic

#endif
