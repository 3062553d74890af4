#include "fic/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fic {

namespace {

// Per-support-point power terms. a/d are the direct received powers, b/c the
// cross (interference) powers, all relative to unit noise.
struct PointTerms {
    double a = 0.0;  // g11^2 phi1
    double b = 0.0;  // g12^2 phi2
    double c = 0.0;  // g21^2 phi1
    double d = 0.0;  // g22^2 phi2
    bool weak1 = false;  // g12 < g22: receiver 1 under weak interference
    bool weak2 = false;  // g21 < g11: receiver 2 under weak interference
};

PointTerms point_terms(const ChannelState& s, double p1, double p2) {
    PointTerms t;
    t.a = s.g11 * s.g11 * p1;
    t.b = s.g12 * s.g12 * p2;
    t.c = s.g21 * s.g21 * p1;
    t.d = s.g22 * s.g22 * p2;
    t.weak1 = s.g12 < s.g22;  // ties go to the strong branch
    t.weak2 = s.g21 < s.g11;
    return t;
}

void check_bound_policies(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                          const PowerPolicy& phi2) {
    if (phi1.csit().size() != ensemble.size() || phi2.csit().size() != ensemble.size())
        throw std::invalid_argument("bounds: power policy not bound to this ensemble");
}

void check_csit_split(const SplitPolicy& split, const PowerPolicy& phi, const char* name) {
    if (split.domain() != SplitPolicy::Domain::CsitIndexed)
        throw std::invalid_argument(std::string("bounds: ") + name +
                                    " must be indexed by CSIT symbols here");
    if (!(split.csit() == phi.csit()))
        throw std::invalid_argument(std::string("bounds: ") + name +
                                    " bound to a different CSIT map than its power policy");
}

void check_state_split(const SplitPolicy& split, const StateEnsemble& ensemble,
                       const char* name) {
    if (split.domain() != SplitPolicy::Domain::StateIndexed)
        throw std::invalid_argument(std::string("bounds: ") + name +
                                    " must be indexed by support points here");
    if (split.values().size() != ensemble.size())
        throw std::invalid_argument(std::string("bounds: ") + name +
                                    " has the wrong number of support points");
}

// Accumulates one expectation per named psi-term, in support order. A psi
// argument that overflowed to inf/NaN (huge fading tails) is reported with
// the support index and the constraint tag; ensemble construction validates
// inputs finite, so this is defensive only.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t n_terms) : sums_(n_terms, 0.0) {}

    void add_psi(const StateEnsemble& ensemble, std::size_t point, std::size_t term, double arg,
                 const char* tag, double sign = 1.0) {
        if (!std::isfinite(arg) || arg < 0.0) throw NonFiniteValueError(point, tag);
        sums_[term] += sign * ensemble.weight(point) * psi(arg);
    }

    double sum(std::size_t term) const { return sums_[term]; }
    double total(std::size_t first, std::size_t last_exclusive) const {
        double acc = 0.0;
        for (std::size_t k = first; k < last_exclusive; ++k) acc += sums_[k];
        return acc;
    }

private:
    std::vector<double> sums_;
};

}  // namespace

RatePolytope inner_polytope(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                            const PowerPolicy& phi2, const SplitPolicy& alpha,
                            const SplitPolicy& beta) {
    check_bound_policies(ensemble, phi1, phi2);
    check_csit_split(alpha, phi1, "alpha");
    check_csit_split(beta, phi2, "beta");

    // 14 psi-terms: c1, c2, c3 (2), c4 (2), c5 (2), c6 (3), c7 (3)
    TermAccumulator acc(14);
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const PointTerms t =
            point_terms(ensemble.state(i), phi1.value_at_point(i), phi2.value_at_point(i));
        const double al = alpha.value_at_point(i);
        const double be = beta.value_at_point(i);
        const double den1 = t.b * be + 1.0;  // private interference floor at receiver 1
        const double den2 = t.c * al + 1.0;

        acc.add_psi(ensemble, i, 0, t.a / den1, "Eq2-c1");
        acc.add_psi(ensemble, i, 1, t.d / den2, "Eq2-c2");
        acc.add_psi(ensemble, i, 2, t.a * al / den1, "Eq2-c3");
        acc.add_psi(ensemble, i, 3, (t.c * (1.0 - al) + t.d) / den2, "Eq2-c3");
        acc.add_psi(ensemble, i, 4, (t.a + t.b * (1.0 - be)) / den1, "Eq2-c4");
        acc.add_psi(ensemble, i, 5, t.d * be / den2, "Eq2-c4");
        acc.add_psi(ensemble, i, 6, (t.a * al + t.b * (1.0 - be)) / den1, "Eq2-c5");
        acc.add_psi(ensemble, i, 7, (t.c * (1.0 - al) + t.d * be) / den2, "Eq2-c5");
        acc.add_psi(ensemble, i, 8, (t.a + t.b * (1.0 - be)) / den1, "Eq2-c6");
        acc.add_psi(ensemble, i, 9, t.a * al / den1, "Eq2-c6");
        acc.add_psi(ensemble, i, 10, (t.c * (1.0 - al) + t.d * be) / den2, "Eq2-c6");
        acc.add_psi(ensemble, i, 11, t.d * be / den2, "Eq2-c7");
        acc.add_psi(ensemble, i, 12, (t.c * (1.0 - al) + t.d) / den2, "Eq2-c7");
        acc.add_psi(ensemble, i, 13, (t.a * al + t.b * (1.0 - be)) / den1, "Eq2-c7");
    }

    std::vector<RateConstraint> rows;
    rows.push_back(make_rate_constraint(1, 0, acc.sum(0), "Eq2-c1"));
    rows.push_back(make_rate_constraint(0, 1, acc.sum(1), "Eq2-c2"));
    rows.push_back(make_rate_constraint(1, 1, acc.total(2, 4), "Eq2-c3"));
    rows.push_back(make_rate_constraint(1, 1, acc.total(4, 6), "Eq2-c4"));
    rows.push_back(make_rate_constraint(1, 1, acc.total(6, 8), "Eq2-c5"));
    rows.push_back(make_rate_constraint(2, 1, acc.total(8, 11), "Eq2-c6"));
    rows.push_back(make_rate_constraint(1, 2, acc.total(11, 14), "Eq2-c7"));
    return make_rate_polytope(std::move(rows), "Eq2");
}

RatePolytope outer_polytope_full(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                 const PowerPolicy& phi2, const SplitPolicy& alpha_s,
                                 const SplitPolicy& beta_s) {
    check_bound_policies(ensemble, phi1, phi2);
    check_state_split(alpha_s, ensemble, "alpha");
    check_state_split(beta_s, ensemble, "beta");

    // 14 psi-terms: c1a, c1b, c2a, c2b, c3, c4, c5 (2), c6 (3), c7 (3)
    TermAccumulator acc(14);
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const PointTerms t =
            point_terms(ensemble.state(i), phi1.value_at_point(i), phi2.value_at_point(i));
        const double al = alpha_s.value_at_point(i);
        const double be = beta_s.value_at_point(i);

        acc.add_psi(ensemble, i, 0, t.a, "Eq18-c1a");
        if (t.weak1)
            acc.add_psi(ensemble, i, 1, (t.a + t.b * (1.0 - al)) / (t.b * al + 1.0), "Eq18-c1b");
        else
            acc.add_psi(ensemble, i, 1, t.a + t.b, "Eq18-c1b");
        acc.add_psi(ensemble, i, 2, t.d, "Eq18-c2a");
        if (t.weak2)
            acc.add_psi(ensemble, i, 3, (t.c * (1.0 - be) + t.d) / (t.c * be + 1.0), "Eq18-c2b");
        else
            acc.add_psi(ensemble, i, 3, t.c + t.d, "Eq18-c2b");
        if (t.weak2) {
            acc.add_psi(ensemble, i, 4, t.a * be, "Eq18-c3");
            acc.add_psi(ensemble, i, 4, (t.c * (1.0 - be) + t.d) / (t.c * be + 1.0), "Eq18-c3");
        } else {
            acc.add_psi(ensemble, i, 4, t.c + t.d, "Eq18-c3");
        }
        if (t.weak1) {
            acc.add_psi(ensemble, i, 5, t.d * al, "Eq18-c4");
            acc.add_psi(ensemble, i, 5, (t.a + t.b * (1.0 - al)) / (t.b * al + 1.0), "Eq18-c4");
        } else {
            acc.add_psi(ensemble, i, 5, t.a + t.b, "Eq18-c4");
        }
        acc.add_psi(ensemble, i, 6, t.b + t.a / (t.c + 1.0), "Eq18-c5");
        acc.add_psi(ensemble, i, 7, t.c + t.d / (t.b + 1.0), "Eq18-c5");
        if (t.weak2) {
            acc.add_psi(ensemble, i, 8, t.a * be, "Eq18-c6");
            acc.add_psi(ensemble, i, 8, t.c * be, "Eq18-c6", -1.0);
        }
        acc.add_psi(ensemble, i, 9, t.c + t.d / (t.b + 1.0), "Eq18-c6");
        acc.add_psi(ensemble, i, 10, t.a + t.b, "Eq18-c6");
        if (t.weak1) {
            acc.add_psi(ensemble, i, 11, t.d * al, "Eq18-c7");
            acc.add_psi(ensemble, i, 11, t.b * al, "Eq18-c7", -1.0);
        }
        acc.add_psi(ensemble, i, 12, t.b + t.a / (t.c + 1.0), "Eq18-c7");
        acc.add_psi(ensemble, i, 13, t.c + t.d, "Eq18-c7");
    }

    std::vector<RateConstraint> rows;
    rows.push_back(make_rate_constraint(1, 0, acc.sum(0), "Eq18-c1a"));
    rows.push_back(make_rate_constraint(1, 0, acc.sum(1), "Eq18-c1b"));
    rows.push_back(make_rate_constraint(0, 1, acc.sum(2), "Eq18-c2a"));
    rows.push_back(make_rate_constraint(0, 1, acc.sum(3), "Eq18-c2b"));
    rows.push_back(make_rate_constraint(1, 1, acc.sum(4), "Eq18-c3"));
    rows.push_back(make_rate_constraint(1, 1, acc.sum(5), "Eq18-c4"));
    rows.push_back(make_rate_constraint(1, 1, acc.total(6, 8), "Eq18-c5"));
    rows.push_back(make_rate_constraint(2, 1, acc.total(8, 11), "Eq18-c6"));
    rows.push_back(make_rate_constraint(1, 2, acc.total(11, 14), "Eq18-c7"));
    return make_rate_polytope(std::move(rows), "Eq18");
}

RatePolytope outer_polytope_relaxed(const StateEnsemble& ensemble, const PowerPolicy& phi1,
                                    const PowerPolicy& phi2) {
    check_bound_policies(ensemble, phi1, phi2);

    // term slots: c1, c2, c3 (weak/strong branch), c4 (weak/strong),
    // c5 (2), c6 (3), c7 (3)
    TermAccumulator acc(14);
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const PointTerms t =
            point_terms(ensemble.state(i), phi1.value_at_point(i), phi2.value_at_point(i));

        acc.add_psi(ensemble, i, 0, t.a, "Eq45-c1");
        acc.add_psi(ensemble, i, 1, t.d, "Eq45-c2");
        if (t.weak2) {
            acc.add_psi(ensemble, i, 2, t.a, "Eq45-c3");
            acc.add_psi(ensemble, i, 2, t.d / (t.c + 1.0), "Eq45-c3");
        } else {
            acc.add_psi(ensemble, i, 3, t.c + t.d, "Eq45-c3");
        }
        if (t.weak1) {
            acc.add_psi(ensemble, i, 4, t.d, "Eq45-c4");
            acc.add_psi(ensemble, i, 4, t.a / (t.b + 1.0), "Eq45-c4");
        } else {
            acc.add_psi(ensemble, i, 5, t.a + t.b, "Eq45-c4");
        }
        acc.add_psi(ensemble, i, 6, t.b + t.a / (t.c + 1.0), "Eq45-c5");
        acc.add_psi(ensemble, i, 7, t.c + t.d / (t.b + 1.0), "Eq45-c5");
        if (t.weak2) {
            acc.add_psi(ensemble, i, 8, t.a, "Eq45-c6");
            acc.add_psi(ensemble, i, 8, t.c, "Eq45-c6", -1.0);
        }
        acc.add_psi(ensemble, i, 9, t.c + t.d / (t.b + 1.0), "Eq45-c6");
        acc.add_psi(ensemble, i, 10, t.a + t.b, "Eq45-c6");
        if (t.weak1) {
            acc.add_psi(ensemble, i, 11, t.d, "Eq45-c7");
            acc.add_psi(ensemble, i, 11, t.b, "Eq45-c7", -1.0);
        }
        acc.add_psi(ensemble, i, 12, t.b + t.a / (t.c + 1.0), "Eq45-c7");
        acc.add_psi(ensemble, i, 13, t.c + t.d, "Eq45-c7");
    }

    std::vector<RateConstraint> rows;
    rows.push_back(make_rate_constraint(1, 0, acc.sum(0), "Eq45-c1"));
    rows.push_back(make_rate_constraint(0, 1, acc.sum(1), "Eq45-c2"));
    rows.push_back(make_rate_constraint(1, 1, acc.total(2, 4), "Eq45-c3"));
    rows.push_back(make_rate_constraint(1, 1, acc.total(4, 6), "Eq45-c4"));
    rows.push_back(make_rate_constraint(1, 1, acc.total(6, 8), "Eq45-c5"));
    rows.push_back(make_rate_constraint(2, 1, acc.total(8, 11), "Eq45-c6"));
    rows.push_back(make_rate_constraint(1, 2, acc.total(11, 14), "Eq45-c7"));
    return make_rate_polytope(std::move(rows), "Eq45");
}

namespace {

void check_static_weak(const ChannelState& s) {
    if (s.g11 != 1.0 || s.g22 != 1.0)
        throw std::invalid_argument("static bounds: direct gains must be normalized to 1");
    if (!(s.g12 < 1.0) || !(s.g21 < 1.0))
        throw std::invalid_argument("static bounds: cross gains must be < 1 (weak regime)");
}

void check_split_scalar(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw std::invalid_argument(std::string("static bounds: ") + name + " must lie in [0, 1]");
}

// All nine rows of the static weak reduction; callers slice.
std::vector<RateConstraint> static_weak_rows(const ChannelState& s, const Budget& budget,
                                             double alpha, double beta) {
    const double p1 = budget.p1, p2 = budget.p2;
    const double gb = s.g12 * s.g12;  // cross power gain into receiver 1
    const double gc = s.g21 * s.g21;  // cross power gain into receiver 2

    std::vector<RateConstraint> rows;
    rows.push_back(make_rate_constraint(1, 0, psi(p1), "Eq39-c1a"));
    rows.push_back(make_rate_constraint(
        1, 0, psi((p1 + gb * (1.0 - alpha) * p2) / (gb * alpha * p2 + 1.0)), "Eq39-c1b"));
    rows.push_back(make_rate_constraint(0, 1, psi(p2), "Eq39-c2a"));
    rows.push_back(make_rate_constraint(
        0, 1, psi((gc * (1.0 - beta) * p1 + p2) / (gc * beta * p1 + 1.0)), "Eq39-c2b"));
    rows.push_back(make_rate_constraint(
        1, 1, psi(beta * p1) + psi((gc * (1.0 - beta) * p1 + p2) / (gc * beta * p1 + 1.0)),
        "Eq39-c3"));
    rows.push_back(make_rate_constraint(
        1, 1, psi(alpha * p2) + psi((p1 + gb * (1.0 - alpha) * p2) / (gb * alpha * p2 + 1.0)),
        "Eq39-c4"));
    rows.push_back(make_rate_constraint(
        1, 1, psi(gb * p2 + p1 / (gc * p1 + 1.0)) + psi(gc * p1 + p2 / (gb * p2 + 1.0)),
        "Eq39-c5"));
    rows.push_back(make_rate_constraint(
        2, 1,
        psi(beta * p1) - psi(gc * beta * p1) + psi(gc * p1 + p2 / (gb * p2 + 1.0)) +
            psi(p1 + gb * p2),
        "Eq39-c6"));
    rows.push_back(make_rate_constraint(
        1, 2,
        psi(alpha * p2) - psi(gb * alpha * p2) + psi(gb * p2 + p1 / (gc * p1 + 1.0)) +
            psi(gc * p1 + p2),
        "Eq39-c7"));
    return rows;
}

}  // namespace

RatePolytope static_weak_outer(const ChannelState& state, const Budget& budget, double alpha,
                               double beta) {
    check_static_weak(state);
    check_split_scalar(alpha, "alpha");
    check_split_scalar(beta, "beta");
    return make_rate_polytope(static_weak_rows(state, budget, alpha, beta), "Eq39");
}

RatePolytope kramer_polytope(const ChannelState& state, const Budget& budget, double alpha,
                             double beta) {
    check_static_weak(state);
    check_split_scalar(alpha, "alpha");
    check_split_scalar(beta, "beta");
    std::vector<RateConstraint> rows = static_weak_rows(state, budget, alpha, beta);
    rows.resize(6);  // c1a, c1b, c2a, c2b, c3, c4
    return make_rate_polytope(std::move(rows), "Kramer");
}

RatePolytope etw_weak_polytope(const ChannelState& state, const Budget& budget) {
    check_static_weak(state);
    std::vector<RateConstraint> all = static_weak_rows(state, budget, 1.0, 1.0);
    std::vector<RateConstraint> rows;
    for (RateConstraint& rc : all)
        if (rc.tag != "Eq39-c1b" && rc.tag != "Eq39-c2b") rows.push_back(std::move(rc));
    return make_rate_polytope(std::move(rows), "ETW");
}

MixedR12R2Pair mixed_r1_2r2_pair(const ChannelState& state, const Budget& budget) {
    if (state.g11 != 1.0 || state.g22 != 1.0)
        throw std::invalid_argument("mixed_r1_2r2_pair: direct gains must be normalized to 1");
    if (!(state.g21 < 1.0) || !(state.g12 >= 1.0))
        throw std::invalid_argument("mixed_r1_2r2_pair: requires g21 < 1 <= g12 (mixed regime)");
    const double p1 = budget.p1, p2 = budget.p2;
    const double gb = state.g12 * state.g12;
    const double gc = state.g21 * state.g21;
    MixedR12R2Pair out;
    out.ours = psi(gb * p2 + p1 / (gc * p1 + 1.0)) + psi(gc * p1 + p2);
    out.etw = out.ours + psi(p2 / (gb * p2 + 1.0));
    return out;
}

}  // namespace fic
