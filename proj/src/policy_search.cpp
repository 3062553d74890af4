#include "fic/policy_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fic/errors.hpp"

namespace fic {

namespace {

constexpr double kBudgetTol = 1e-9;

void check_grid(const PolicyGrid& grid) {
    if (!(grid.power_step > 0.0) || !(grid.power_step <= 1.0))
        throw std::invalid_argument("PolicyGrid: power_step must lie in (0, 1]");
    if (!(grid.split_step > 0.0) || !(grid.split_step <= 1.0))
        throw std::invalid_argument("PolicyGrid: split_step must lie in (0, 1]");
    if (!(grid.cap >= 1.0))
        throw std::invalid_argument("PolicyGrid: cap must be >= 1 so full power is representable");
}

// Weight mass of each CSIT symbol on the support.
std::vector<double> symbol_weights(const StateEnsemble& ensemble, const CsitMap& csit) {
    std::vector<double> w(static_cast<std::size_t>(csit.alphabet_size()), 0.0);
    for (std::size_t i = 0; i < ensemble.size(); ++i)
        w[static_cast<std::size_t>(csit.label(i))] += ensemble.weight(i);
    return w;
}

std::vector<double> per_symbol_power_levels(double budget, const PolicyGrid& grid) {
    std::vector<double> levels;
    if (budget == 0.0) {
        levels.push_back(0.0);
        return levels;
    }
    const double step = grid.power_step * budget;
    const int k_max = static_cast<int>(std::floor(grid.cap / grid.power_step + 1e-9));
    for (int k = 0; k <= k_max; ++k) levels.push_back(step * k);
    // full power must always be representable
    bool has_budget = false;
    for (double v : levels)
        if (std::abs(v - budget) <= 1e-12 * std::max(1.0, budget)) has_budget = true;
    if (!has_budget) levels.push_back(budget);
    std::sort(levels.begin(), levels.end());
    return levels;
}

std::vector<double> split_levels(const PolicyGrid& grid) {
    std::vector<double> levels;
    for (double v = 0.0; v < 1.0 - 1e-12; v += grid.split_step) levels.push_back(v);
    levels.push_back(1.0);
    return levels;
}

}  // namespace

std::vector<PowerPolicy> feasible_power_policies(const StateEnsemble& ensemble,
                                                 const CsitMap& csit, double budget,
                                                 const PolicyGrid& grid) {
    check_grid(grid);
    if (!(budget >= 0.0) || !std::isfinite(budget))
        throw std::invalid_argument("feasible_power_policies: budget must be finite and >= 0");
    if (csit.size() != ensemble.size())
        throw std::invalid_argument("feasible_power_policies: CSIT map not bound to ensemble");

    const std::vector<double> weights = symbol_weights(ensemble, csit);
    const std::vector<double> levels = per_symbol_power_levels(budget, grid);
    const std::size_t n_symbols = weights.size();

    std::vector<PowerPolicy> out;
    std::vector<double> current(n_symbols, 0.0);
    // Lexicographic DFS over per-symbol levels; the running expectation prunes
    // infeasible prefixes (levels ascend, remaining symbols can stay at 0).
    auto recurse = [&](auto&& self, std::size_t symbol, double partial) -> void {
        if (symbol == n_symbols) {
            out.emplace_back(csit, current);
            return;
        }
        for (double v : levels) {
            const double next = partial + weights[symbol] * v;
            if (next > budget + kBudgetTol) break;
            current[symbol] = v;
            self(self, symbol + 1, next);
        }
        current[symbol] = 0.0;
    };
    recurse(recurse, 0, 0.0);
    return out;
}

std::pair<SplitPolicy, SplitPolicy> etw_split_policy(const StateEnsemble& ensemble,
                                                     const PowerPolicy& phi1,
                                                     const PowerPolicy& phi2) {
    if (!csit_determines_inr(phi1.csit(), ensemble, CrossLink::ToRx2))
        throw HypothesisError(
            "etw_split_policy: transmitter 1's CSIT does not determine |g21|");
    if (!csit_determines_inr(phi2.csit(), ensemble, CrossLink::ToRx1))
        throw HypothesisError(
            "etw_split_policy: transmitter 2's CSIT does not determine |g12|");

    auto build = [&](const PowerPolicy& phi, CrossLink link) {
        std::vector<double> gain(static_cast<std::size_t>(phi.csit().alphabet_size()), 0.0);
        std::vector<bool> seen(gain.size(), false);
        for (std::size_t i = 0; i < ensemble.size(); ++i) {
            const auto sym = static_cast<std::size_t>(phi.csit().label(i));
            if (!seen[sym]) {
                gain[sym] = cross_gain(ensemble.state(i), link);
                seen[sym] = true;
            }
        }
        std::vector<double> values(gain.size(), 1.0);
        for (std::size_t sym = 0; sym < gain.size(); ++sym) {
            const double inr = gain[sym] * gain[sym] * phi.value_for_symbol(static_cast<int>(sym));
            if (inr > 1.0) values[sym] = 1.0 / inr;
        }
        return SplitPolicy::csit_indexed(phi.csit(), std::move(values));
    };

    return {build(phi1, CrossLink::ToRx2), build(phi2, CrossLink::ToRx1)};
}

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::InnerEq2: return "inner";
        case BoundKind::OuterEq18: return "outer-full";
        case BoundKind::OuterEq45: return "outer-relaxed";
    }
    return "?";
}

namespace {

// A full policy assignment under search. Split values are per CSIT symbol
// for the achievable region and per support point for the full outer bound.
struct WorkingPoint {
    std::vector<double> phi1;
    std::vector<double> phi2;
    std::vector<double> alpha;
    std::vector<double> beta;
};

struct SearchContext {
    BoundKind kind;
    const StateEnsemble& ensemble;
    const CsitMap& csit1;
    const CsitMap& csit2;
    Budget budget;
    std::vector<double> symbol_weights1;
    std::vector<double> symbol_weights2;
    double cap1 = 0.0;
    double cap2 = 0.0;
    // Coordinate groups refined jointly: one per CSIT symbol for the inner
    // bound; one per support point for the full outer bound, or one per
    // distinct (direct gain, own CSIT symbol) pair under the i.i.d.-state
    // restriction.
    std::vector<std::vector<std::size_t>> alpha_groups;
    std::vector<std::vector<std::size_t>> beta_groups;
};

RatePolytope eval_polytope(const SearchContext& ctx, const WorkingPoint& p) {
    PowerPolicy phi1(ctx.csit1, p.phi1);
    PowerPolicy phi2(ctx.csit2, p.phi2);
    switch (ctx.kind) {
        case BoundKind::InnerEq2:
            return inner_polytope(ctx.ensemble, phi1, phi2,
                                  SplitPolicy::csit_indexed(ctx.csit1, p.alpha),
                                  SplitPolicy::csit_indexed(ctx.csit2, p.beta));
        case BoundKind::OuterEq18:
            return outer_polytope_full(ctx.ensemble, phi1, phi2,
                                       SplitPolicy::state_indexed(p.alpha),
                                       SplitPolicy::state_indexed(p.beta));
        case BoundKind::OuterEq45:
            return outer_polytope_relaxed(ctx.ensemble, phi1, phi2);
    }
    throw std::logic_error("eval_polytope: unknown bound kind");
}

std::vector<std::vector<std::size_t>> singleton_groups(std::size_t n) {
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[i] = {i};
    return groups;
}

std::vector<std::vector<std::size_t>> grouped_by(const StateEnsemble& ensemble,
                                                 const CsitMap& own_csit, bool use_g22) {
    std::map<std::pair<double, int>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const ChannelState& s = ensemble.state(i);
        buckets[{use_g22 ? s.g22 : s.g11, own_csit.label(i)}].push_back(i);
    }
    std::vector<std::vector<std::size_t>> groups;
    groups.reserve(buckets.size());
    for (auto& [key, idx] : buckets) groups.push_back(std::move(idx));
    return groups;
}

SearchContext make_context(BoundKind kind, const StateEnsemble& ensemble, const CsitMap& csit1,
                           const CsitMap& csit2, const Budget& budget, const PolicyGrid& grid,
                           const SearchOptions& options) {
    SearchContext ctx{kind, ensemble, csit1, csit2, budget, {}, {}, 0.0, 0.0, {}, {}};
    ctx.symbol_weights1 = symbol_weights(ensemble, csit1);
    ctx.symbol_weights2 = symbol_weights(ensemble, csit2);
    ctx.cap1 = grid.cap * budget.p1;
    ctx.cap2 = grid.cap * budget.p2;
    if (kind == BoundKind::InnerEq2) {
        ctx.alpha_groups = singleton_groups(static_cast<std::size_t>(csit1.alphabet_size()));
        ctx.beta_groups = singleton_groups(static_cast<std::size_t>(csit2.alphabet_size()));
    } else if (kind == BoundKind::OuterEq18) {
        if (options.iid_split_restriction) {
            // alpha may only depend on (g22, E2); beta on (g11, E1)
            ctx.alpha_groups = grouped_by(ensemble, csit2, /*use_g22=*/true);
            ctx.beta_groups = grouped_by(ensemble, csit1, /*use_g22=*/false);
        } else {
            ctx.alpha_groups = singleton_groups(ensemble.size());
            ctx.beta_groups = singleton_groups(ensemble.size());
        }
    }
    return ctx;
}

std::size_t alpha_dim(const SearchContext& ctx) {
    switch (ctx.kind) {
        case BoundKind::InnerEq2: return static_cast<std::size_t>(ctx.csit1.alphabet_size());
        case BoundKind::OuterEq18: return ctx.ensemble.size();
        case BoundKind::OuterEq45: return 0;
    }
    return 0;
}

std::size_t beta_dim(const SearchContext& ctx) {
    switch (ctx.kind) {
        case BoundKind::InnerEq2: return static_cast<std::size_t>(ctx.csit2.alphabet_size());
        case BoundKind::OuterEq18: return ctx.ensemble.size();
        case BoundKind::OuterEq45: return 0;
    }
    return 0;
}

// Grid-stage candidates: the cartesian product of feasible power policies
// with constant split levels (per-symbol/per-state freedom is explored by
// coordinate ascent), plus the interference-aware split assignment per power
// pair when the CSIT admits it.
std::vector<WorkingPoint> grid_candidates(const SearchContext& ctx, const PolicyGrid& grid) {
    std::vector<PowerPolicy> phis1 =
        feasible_power_policies(ctx.ensemble, ctx.csit1, ctx.budget.p1, grid);
    std::vector<PowerPolicy> phis2 =
        feasible_power_policies(ctx.ensemble, ctx.csit2, ctx.budget.p2, grid);
    const std::vector<double> levels = split_levels(grid);
    const bool etw_candidate =
        ctx.kind == BoundKind::InnerEq2 &&
        csit_determines_inr(ctx.csit1, ctx.ensemble, CrossLink::ToRx2) &&
        csit_determines_inr(ctx.csit2, ctx.ensemble, CrossLink::ToRx1);

    std::vector<WorkingPoint> candidates;
    for (const PowerPolicy& f1 : phis1) {
        for (const PowerPolicy& f2 : phis2) {
            WorkingPoint base;
            base.phi1 = f1.values();
            base.phi2 = f2.values();
            if (ctx.kind == BoundKind::OuterEq45) {
                candidates.push_back(base);
                continue;
            }
            for (double av : levels) {
                for (double bv : levels) {
                    WorkingPoint p = base;
                    p.alpha.assign(alpha_dim(ctx), av);
                    p.beta.assign(beta_dim(ctx), bv);
                    candidates.push_back(std::move(p));
                }
            }
            if (etw_candidate) {
                auto [alpha, beta] = etw_split_policy(ctx.ensemble, f1, f2);
                WorkingPoint p = base;
                p.alpha = alpha.values();
                p.beta = beta.values();
                candidates.push_back(std::move(p));
            }
        }
    }
    if (candidates.empty()) throw std::invalid_argument("policy search: empty candidate grid");
    return candidates;
}

// Index-chunked parallel map with slot writes; bitwise independent of the
// thread count.
template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < n; i += n_threads) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

double objective(const SearchContext& ctx, const WorkingPoint& p, double w1, double w2) {
    return support_value(eval_polytope(ctx, p), w1, w2);
}

// Bracketed golden-section probe of f over [lo, hi]; returns the best probed
// abscissa. Deterministic; the caller accepts it only on improvement.
template <class F>
std::pair<double, double> golden_max(double lo, double hi, F&& f, int iters = 32) {
    const double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    double best_x = f1 >= f2 ? x1 : x2;
    double best_f = std::max(f1, f2);
    for (int it = 0; it < iters; ++it) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
        if (f1 > best_f) {
            best_f = f1;
            best_x = x1;
        }
        if (f2 > best_f) {
            best_f = f2;
            best_x = x2;
        }
    }
    for (double endpoint : {lo, hi}) {
        const double fe = f(endpoint);
        if (fe > best_f) {
            best_f = fe;
            best_x = endpoint;
        }
    }
    return {best_x, best_f};
}

// One pass of single-coordinate ascent over powers and split groups.
double refine_round(const SearchContext& ctx, WorkingPoint& p, double w1, double w2,
                    double current) {
    // power coordinates, transmitter 1 then 2
    for (int tx = 0; tx < 2; ++tx) {
        std::vector<double>& phi = tx == 0 ? p.phi1 : p.phi2;
        const std::vector<double>& weights = tx == 0 ? ctx.symbol_weights1 : ctx.symbol_weights2;
        const double budget = tx == 0 ? ctx.budget.p1 : ctx.budget.p2;
        const double cap = tx == 0 ? ctx.cap1 : ctx.cap2;
        for (std::size_t e = 0; e < phi.size(); ++e) {
            if (weights[e] <= 0.0) continue;
            double others = 0.0;
            for (std::size_t k = 0; k < phi.size(); ++k)
                if (k != e) others += weights[k] * phi[k];
            const double hi = std::min(cap, std::max(0.0, (budget + kBudgetTol - others)) / weights[e]);
            auto f = [&](double v) {
                WorkingPoint q = p;
                (tx == 0 ? q.phi1 : q.phi2)[e] = v;
                return objective(ctx, q, w1, w2);
            };
            auto [x, fx] = golden_max(0.0, hi, f);
            if (fx > current) {
                phi[e] = x;
                current = fx;
            }
        }
    }
    // split coordinates
    for (int which = 0; which < 2; ++which) {
        std::vector<double>& split = which == 0 ? p.alpha : p.beta;
        const auto& groups = which == 0 ? ctx.alpha_groups : ctx.beta_groups;
        if (split.empty()) continue;
        for (const std::vector<std::size_t>& group : groups) {
            auto f = [&](double v) {
                WorkingPoint q = p;
                auto& qs = which == 0 ? q.alpha : q.beta;
                for (std::size_t idx : group) qs[idx] = v;
                return objective(ctx, q, w1, w2);
            };
            auto [x, fx] = golden_max(0.0, 1.0, f);
            if (fx > current) {
                for (std::size_t idx : group) split[idx] = x;
                current = fx;
            }
        }
    }
    return current;
}

SearchResult result_from_point(const SearchContext& ctx, const WorkingPoint& p, double value) {
    SearchResult r{eval_polytope(ctx, p), PowerPolicy(ctx.csit1, p.phi1),
                   PowerPolicy(ctx.csit2, p.phi2), std::nullopt, std::nullopt, value};
    if (ctx.kind == BoundKind::InnerEq2) {
        r.alpha = SplitPolicy::csit_indexed(ctx.csit1, p.alpha);
        r.beta = SplitPolicy::csit_indexed(ctx.csit2, p.beta);
    } else if (ctx.kind == BoundKind::OuterEq18) {
        r.alpha = SplitPolicy::state_indexed(p.alpha);
        r.beta = SplitPolicy::state_indexed(p.beta);
    }
    return r;
}

}  // namespace

SearchResult maximize_weighted_sum(BoundKind kind, const StateEnsemble& ensemble,
                                   const CsitMap& csit1, const CsitMap& csit2,
                                   const Budget& budget, double w1, double w2,
                                   const PolicyGrid& grid, const SearchOptions& options) {
    check_grid(grid);
    SearchContext ctx = make_context(kind, ensemble, csit1, csit2, budget, grid, options);
    const std::vector<WorkingPoint> candidates = grid_candidates(ctx, grid);

    std::vector<double> values(candidates.size());
    parallel_for(candidates.size(), options.threads,
                 [&](std::size_t i) { values[i] = objective(ctx, candidates[i], w1, w2); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (values[i] > values[best]) best = i;

    WorkingPoint point = candidates[best];
    double value = values[best];
    for (int round = 0; round < options.refine_rounds; ++round)
        value = refine_round(ctx, point, w1, w2, value);

    return result_from_point(ctx, point, value);
}

RateRegion trace_boundary(BoundKind kind, const StateEnsemble& ensemble, const CsitMap& csit1,
                          const CsitMap& csit2, const Budget& budget, int direction_count,
                          const PolicyGrid& grid, const SearchOptions& options) {
    return trace_boundary_detailed(kind, ensemble, csit1, csit2, budget, direction_count, grid,
                                   options)
        .region;
}

TracedBound trace_boundary_detailed(BoundKind kind, const StateEnsemble& ensemble,
                                    const CsitMap& csit1, const CsitMap& csit2,
                                    const Budget& budget, int direction_count,
                                    const PolicyGrid& grid, const SearchOptions& options) {
    check_grid(grid);
    if (direction_count < 4)
        throw std::invalid_argument("trace_boundary: need at least 4 directions");
    SearchContext ctx = make_context(kind, ensemble, csit1, csit2, budget, grid, options);
    const std::vector<WorkingPoint> candidates = grid_candidates(ctx, grid);

    // Evaluate each candidate's polytope once; the direction sweep reduces
    // over cached vertex sets.
    std::vector<RatePolytope> polytopes(candidates.size());
    std::vector<std::vector<RatePoint>> polytope_vertices(candidates.size());
    parallel_for(candidates.size(), options.threads, [&](std::size_t i) {
        polytopes[i] = eval_polytope(ctx, candidates[i]);
        polytope_vertices[i] = vertices(polytopes[i]);
    });

    const std::vector<double> angles = direction_grid(direction_count);
    std::vector<std::size_t> arg(angles.size());
    std::vector<double> val(angles.size());
    parallel_for(angles.size(), options.threads, [&](std::size_t j) {
        const double w1 = std::cos(angles[j]);
        const double w2 = std::sin(angles[j]);
        std::size_t best = 0;
        double best_v = -1.0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            double s = 0.0;
            for (const RatePoint& v : polytope_vertices[i])
                s = std::max(s, w1 * v.r1 + w2 * v.r2);
            if (s > best_v) {
                best_v = s;
                best = i;
            }
        }
        arg[j] = best;
        val[j] = best_v;
    });

    TracedBound out;
    RateRegion& region = out.region;
    region.angles = angles;
    region.support.resize(angles.size());
    region.achieving_member.resize(angles.size());

    if (options.refine_rounds <= 0) {
        // distinct argmax candidates become the region members
        std::vector<int> member_of(candidates.size(), -1);
        for (std::size_t j = 0; j < angles.size(); ++j) {
            const std::size_t i = arg[j];
            if (member_of[i] < 0) {
                member_of[i] = static_cast<int>(region.members.size());
                region.members.push_back(polytopes[i]);
                out.member_policies.push_back(result_from_point(ctx, candidates[i], val[j]));
            }
            region.achieving_member[j] = member_of[i];
            region.support[j] = val[j];
        }
        return out;
    }

    // per-direction refinement produces its own member polytope
    std::vector<WorkingPoint> refined_points(angles.size());
    std::vector<double> refined_val(angles.size());
    parallel_for(angles.size(), options.threads, [&](std::size_t j) {
        const double w1 = std::cos(angles[j]);
        const double w2 = std::sin(angles[j]);
        WorkingPoint point = candidates[arg[j]];
        double value = val[j];
        for (int round = 0; round < options.refine_rounds; ++round)
            value = refine_round(ctx, point, w1, w2, value);
        refined_points[j] = std::move(point);
        refined_val[j] = value;
    });
    for (std::size_t j = 0; j < angles.size(); ++j) {
        SearchResult res = result_from_point(ctx, refined_points[j], refined_val[j]);
        region.members.push_back(res.polytope);
        out.member_policies.push_back(std::move(res));
        region.achieving_member[j] = static_cast<int>(j);
        region.support[j] = refined_val[j];
    }
    return out;
}

}  // namespace fic
