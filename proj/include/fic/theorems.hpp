#ifndef FIC_THEOREMS_HPP
#define FIC_THEOREMS_HPP

#include <string>
#include <vector>

#include "fic/bounds.hpp"
#include "fic/geometry.hpp"
#include "fic/policy_search.hpp"

namespace fic {

// Interference regime over the whole support. Uniformly strong: both cross
// gains dominate the direct gains at every point. Uniformly mixed: receiver 1
// sees strong interference (g12 >= g22) and receiver 2 weak (g21 <= g11)
// everywhere. Uniformly weak: both strictly weak everywhere.
enum class Regime { UniformlyStrong, UniformlyMixed, UniformlyWeak, MixedOverTime };

std::string regime_name(Regime regime);

Regime classify_regime(const StateEnsemble& ensemble);

// Capacity region member for uniformly strong interference at fixed powers:
// both receivers decode both messages. Four rows "Eq55-c1".."Eq55-c4".
RatePolytope strong_capacity_polytope(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                      const PowerPolicy& phi2);

// Sum-rate capacity for uniformly mixed interference: grid maximum over
// power policies of min{E[psi(a) + psi(d/(c+1))], E[psi(a+b)]}.
struct MixedSumCapacity {
    double value = 0.0;
    PowerPolicy phi1;
    PowerPolicy phi2;
};

MixedSumCapacity mixed_sum_capacity(const StateEnsemble& ensemble, const CsitMap& csit1,
                                    const CsitMap& csit2, const Budget& budget,
                                    const PolicyGrid& grid);

// Machine-checkable one-bit-gap certificate: the relaxed outer bound at
// (phi1, phi2) against the achievable region at the same powers and the
// interference-aware splits. Records (i) per-constraint term decompositions,
// pairing each outer psi-term with its inner counterpart (margin =
// inner + delta - outer, must be >= 0), and (ii) geometric containment of
// the outer vertices shifted down by delta. Verdict passes only if both hold.
struct GapTermPair {
    std::string label;
    double outer_value = 0.0;
    double inner_value = 0.0;
    double margin = 0.0;
};

struct GapConstraintRecord {
    std::string outer_tag;
    std::string inner_tag;
    int a = 0;
    int b = 0;
    double outer_c = 0.0;
    double inner_c = 0.0;
    std::vector<GapTermPair> terms;
    double min_term_margin = 0.0;
};

struct GapCertificate {
    double delta = 1.0;
    std::vector<GapConstraintRecord> constraints;
    ShiftedContainmentReport containment;
    double min_term_margin = 0.0;
    bool terms_pass = false;
    bool containment_pass = false;
    bool pass = false;
};

GapCertificate one_bit_gap_certificate(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                       const PowerPolicy& phi2, double delta = 1.0,
                                       double tol = 1e-9);

// Smallest delta at which the certificate passes, bisected to `resolution`.
double smallest_passing_delta(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                              const PowerPolicy& phi2, double resolution = 1e-3);

}  // namespace fic

#endif
