#include "fic/theorems.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "fic/errors.hpp"

namespace fic {

std::string regime_name(Regime regime) {
    switch (regime) {
        case Regime::UniformlyStrong: return "uniformly-strong";
        case Regime::UniformlyMixed: return "uniformly-mixed";
        case Regime::UniformlyWeak: return "uniformly-weak";
        case Regime::MixedOverTime: return "mixed-over-time";
    }
    return "?";
}

Regime classify_regime(const StateEnsemble& ensemble) {
    bool all_strong = true;   // both receivers see strong interference
    bool all_mixed = true;    // receiver 1 strong, receiver 2 weak
    bool all_weak = true;     // both strictly weak
    for (const ChannelState& s : ensemble.states()) {
        const bool rx1_strong = s.g12 >= s.g22;
        const bool rx2_strong = s.g21 >= s.g11;
        all_strong = all_strong && rx1_strong && rx2_strong;
        all_mixed = all_mixed && rx1_strong && s.g21 <= s.g11;
        all_weak = all_weak && !rx1_strong && !rx2_strong;
    }
    if (all_strong) return Regime::UniformlyStrong;
    if (all_mixed) return Regime::UniformlyMixed;
    if (all_weak) return Regime::UniformlyWeak;
    return Regime::MixedOverTime;
}

RatePolytope strong_capacity_polytope(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                      const PowerPolicy& phi2) {
    if (classify_regime(ensemble) != Regime::UniformlyStrong)
        throw std::invalid_argument(
            "strong_capacity_polytope: ensemble is not uniformly strong");
    if (phi1.csit().size() != ensemble.size() || phi2.csit().size() != ensemble.size())
        throw std::invalid_argument("strong_capacity_polytope: policy not bound to ensemble");

    auto ex = [&](auto&& f, const char* tag) {
        return expect(
            ensemble,
            [&](const ChannelState& s, std::size_t i) {
                return f(s, phi1.value_at_point(i), phi2.value_at_point(i));
            },
            tag);
    };
    std::vector<RateConstraint> rows;
    rows.push_back(make_rate_constraint(
        1, 0, ex([](const ChannelState& s, double p1, double) { return psi(s.g11 * s.g11 * p1); },
                 "Eq55-c1"),
        "Eq55-c1"));
    rows.push_back(make_rate_constraint(
        0, 1, ex([](const ChannelState& s, double, double p2) { return psi(s.g22 * s.g22 * p2); },
                 "Eq55-c2"),
        "Eq55-c2"));
    rows.push_back(make_rate_constraint(
        1, 1,
        ex([](const ChannelState& s, double p1,
              double p2) { return psi(s.g11 * s.g11 * p1 + s.g12 * s.g12 * p2); },
           "Eq55-c3"),
        "Eq55-c3"));
    rows.push_back(make_rate_constraint(
        1, 1,
        ex([](const ChannelState& s, double p1,
              double p2) { return psi(s.g21 * s.g21 * p1 + s.g22 * s.g22 * p2); },
           "Eq55-c4"),
        "Eq55-c4"));
    return make_rate_polytope(std::move(rows), "Eq55");
}

MixedSumCapacity mixed_sum_capacity(const StateEnsemble& ensemble, const CsitMap& csit1,
                                    const CsitMap& csit2, const Budget& budget,
                                    const PolicyGrid& grid) {
    if (classify_regime(ensemble) != Regime::UniformlyMixed)
        throw std::invalid_argument("mixed_sum_capacity: ensemble is not uniformly mixed");

    const std::vector<PowerPolicy> phis1 =
        feasible_power_policies(ensemble, csit1, budget.p1, grid);
    const std::vector<PowerPolicy> phis2 =
        feasible_power_policies(ensemble, csit2, budget.p2, grid);

    double best = -1.0;
    const PowerPolicy* best1 = nullptr;
    const PowerPolicy* best2 = nullptr;
    for (const PowerPolicy& f1 : phis1) {
        for (const PowerPolicy& f2 : phis2) {
            // min of: receiver 1 decodes both, receiver 2 treats interference
            // as noise; receiver 1's full multiple-access sum
            const double decode_both = expect(
                ensemble,
                [&](const ChannelState& s, std::size_t i) {
                    const double a = s.g11 * s.g11 * f1.value_at_point(i);
                    const double c = s.g21 * s.g21 * f1.value_at_point(i);
                    const double d = s.g22 * s.g22 * f2.value_at_point(i);
                    return psi(a) + psi(d / (c + 1.0));
                },
                "Eq56-first");
            const double mac_sum = expect(
                ensemble,
                [&](const ChannelState& s, std::size_t i) {
                    return psi(s.g11 * s.g11 * f1.value_at_point(i) +
                               s.g12 * s.g12 * f2.value_at_point(i));
                },
                "Eq56-second");
            const double value = std::min(decode_both, mac_sum);
            if (value > best) {
                best = value;
                best1 = &f1;
                best2 = &f2;
            }
        }
    }
    return MixedSumCapacity{best, *best1, *best2};
}

namespace {

struct CertTerms {
    // outer decomposition (exactly regrouped where the bound's weak branch
    // factors as a psi-difference plus a full-power term)
    double o_c1 = 0, o_c2 = 0;
    double o_c3_a = 0, o_c3_b = 0;
    double o_c4_a = 0, o_c4_b = 0;
    double o_c5_a = 0, o_c5_b = 0;
    double o_c6_a = 0, o_c6_b = 0, o_c6_c = 0;
    double o_c7_a = 0, o_c7_b = 0, o_c7_c = 0;
    // inner counterparts at the interference-aware splits
    double i_c1 = 0, i_c2 = 0;
    double i_c3_a = 0, i_c3_b = 0;
    double i_c4_a = 0, i_c4_b = 0;
    double i_c5_a = 0, i_c5_b = 0;
};

CertTerms accumulate_terms(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                           const PowerPolicy& phi2, const SplitPolicy& alpha,
                           const SplitPolicy& beta) {
    CertTerms t;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const ChannelState& s = ensemble.state(i);
        const double w = ensemble.weight(i);
        const double a = s.g11 * s.g11 * phi1.value_at_point(i);
        const double b = s.g12 * s.g12 * phi2.value_at_point(i);
        const double c = s.g21 * s.g21 * phi1.value_at_point(i);
        const double d = s.g22 * s.g22 * phi2.value_at_point(i);
        const bool weak1 = s.g12 < s.g22;
        const bool weak2 = s.g21 < s.g11;
        const double al = alpha.value_at_point(i);
        const double be = beta.value_at_point(i);
        const double den1 = b * be + 1.0;
        const double den2 = c * al + 1.0;

        t.o_c1 += w * psi(a);
        t.o_c2 += w * psi(d);
        t.o_c3_a += w * (weak2 ? psi(a) - psi(c) : 0.0);
        t.o_c3_b += w * psi(c + d);
        t.o_c4_a += w * (weak1 ? psi(d) - psi(b) : 0.0);
        t.o_c4_b += w * psi(a + b);
        t.o_c5_a += w * psi(b + a / (c + 1.0));
        t.o_c5_b += w * psi(c + d / (b + 1.0));
        t.o_c6_a += w * (weak2 ? psi(a) - psi(c) : 0.0);
        t.o_c6_b += w * psi(c + d / (b + 1.0));
        t.o_c6_c += w * psi(a + b);
        t.o_c7_a += w * (weak1 ? psi(d) - psi(b) : 0.0);
        t.o_c7_b += w * psi(b + a / (c + 1.0));
        t.o_c7_c += w * psi(c + d);

        t.i_c1 += w * psi(a / den1);
        t.i_c2 += w * psi(d / den2);
        t.i_c3_a += w * psi(a * al / den1);
        t.i_c3_b += w * psi((c * (1.0 - al) + d) / den2);
        t.i_c4_a += w * psi(d * be / den2);
        t.i_c4_b += w * psi((a + b * (1.0 - be)) / den1);
        t.i_c5_a += w * psi((a * al + b * (1.0 - be)) / den1);
        t.i_c5_b += w * psi((c * (1.0 - al) + d * be) / den2);
    }
    return t;
}

GapTermPair make_pair_record(const std::string& label, double outer, double inner,
                             double delta) {
    return GapTermPair{label, outer, inner, inner + delta - outer};
}

}  // namespace

GapCertificate one_bit_gap_certificate(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                       const PowerPolicy& phi2, double delta, double tol) {
    if (!csit_determines_inr(phi1.csit(), ensemble, CrossLink::ToRx2))
        throw HypothesisError(
            "one_bit_gap_certificate: transmitter 1's CSIT does not determine |g21|");
    if (!csit_determines_inr(phi2.csit(), ensemble, CrossLink::ToRx1))
        throw HypothesisError(
            "one_bit_gap_certificate: transmitter 2's CSIT does not determine |g12|");

    const auto [alpha, beta] = etw_split_policy(ensemble, phi1, phi2);
    const RatePolytope outer = outer_polytope_relaxed(ensemble, phi1, phi2);
    const RatePolytope inner = inner_polytope(ensemble, phi1, phi2, alpha, beta);
    const CertTerms t = accumulate_terms(ensemble, phi1, phi2, alpha, beta);

    GapCertificate cert;
    cert.delta = delta;

    auto add_constraint = [&](const char* outer_tag, const char* inner_tag, int a, int b,
                              std::vector<GapTermPair> terms) {
        GapConstraintRecord rec;
        rec.outer_tag = outer_tag;
        rec.inner_tag = inner_tag;
        rec.a = a;
        rec.b = b;
        rec.outer_c = find_constraint(outer, outer_tag)->c;
        rec.inner_c = find_constraint(inner, inner_tag)->c;
        rec.terms = std::move(terms);
        rec.min_term_margin = rec.terms.front().margin;
        for (const GapTermPair& p : rec.terms)
            rec.min_term_margin = std::min(rec.min_term_margin, p.margin);
        cert.constraints.push_back(std::move(rec));
    };

    add_constraint("Eq45-c1", "Eq2-c1", 1, 0, {make_pair_record("A", t.o_c1, t.i_c1, delta)});
    add_constraint("Eq45-c2", "Eq2-c2", 0, 1, {make_pair_record("A", t.o_c2, t.i_c2, delta)});
    add_constraint("Eq45-c3", "Eq2-c3", 1, 1,
                   {make_pair_record("A", t.o_c3_a, t.i_c3_a, delta),
                    make_pair_record("B", t.o_c3_b, t.i_c3_b, delta)});
    add_constraint("Eq45-c4", "Eq2-c4", 1, 1,
                   {make_pair_record("A", t.o_c4_a, t.i_c4_a, delta),
                    make_pair_record("B", t.o_c4_b, t.i_c4_b, delta)});
    add_constraint("Eq45-c5", "Eq2-c5", 1, 1,
                   {make_pair_record("A", t.o_c5_a, t.i_c5_a, delta),
                    make_pair_record("B", t.o_c5_b, t.i_c5_b, delta)});
    add_constraint("Eq45-c6", "Eq2-c6", 2, 1,
                   {make_pair_record("A", t.o_c6_a, t.i_c3_a, delta),
                    make_pair_record("B", t.o_c6_b, t.i_c5_b, delta),
                    make_pair_record("C", t.o_c6_c, t.i_c4_b, delta)});
    add_constraint("Eq45-c7", "Eq2-c7", 1, 2,
                   {make_pair_record("A", t.o_c7_a, t.i_c4_a, delta),
                    make_pair_record("B", t.o_c7_b, t.i_c5_a, delta),
                    make_pair_record("C", t.o_c7_c, t.i_c3_b, delta)});

    cert.min_term_margin = cert.constraints.front().min_term_margin;
    for (const GapConstraintRecord& rec : cert.constraints)
        cert.min_term_margin = std::min(cert.min_term_margin, rec.min_term_margin);
    cert.terms_pass = cert.min_term_margin >= -tol;

    cert.containment = shifted_containment(outer, inner, delta);
    cert.containment_pass = cert.containment.pass;
    cert.pass = cert.terms_pass && cert.containment_pass;
    return cert;
}

double smallest_passing_delta(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                              const PowerPolicy& phi2, double resolution) {
    if (!(resolution > 0.0))
        throw std::invalid_argument("smallest_passing_delta: resolution must be > 0");
    auto passes = [&](double delta) {
        return one_bit_gap_certificate(ensemble, phi1, phi2, delta).pass;
    };
    double hi = 1.0;
    if (!passes(hi)) return std::numeric_limits<double>::quiet_NaN();
    double lo = 0.0;
    if (passes(lo)) return 0.0;
    while (hi - lo > resolution) {
        const double mid = 0.5 * (lo + hi);
        (passes(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace fic
