#include "fic/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "fic/rng.hpp"

namespace fic {

namespace {

void check_gain(double g, const char* name) {
    if (!std::isfinite(g) || g < 0.0)
        throw std::invalid_argument(std::string("ChannelState: ") + name +
                                    " must be finite and >= 0");
}

}  // namespace

ChannelState make_channel_state(double g11, double g12, double g21, double g22) {
    check_gain(g11, "g11");
    check_gain(g12, "g12");
    check_gain(g21, "g21");
    check_gain(g22, "g22");
    return ChannelState{g11, g12, g21, g22};
}

StateEnsemble::StateEnsemble(std::vector<ChannelState> states, std::vector<double> weights,
                             Provenance provenance)
    : states_(std::move(states)), weights_(std::move(weights)), provenance_(std::move(provenance)) {
    if (states_.empty()) throw std::invalid_argument("StateEnsemble: empty support");
    if (states_.size() != weights_.size())
        throw std::invalid_argument("StateEnsemble: states/weights length mismatch");
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w <= 0.0)
            throw std::invalid_argument("StateEnsemble: weights must be finite and > 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("StateEnsemble: weights sum to " + std::to_string(sum) +
                                    ", expected 1 within 1e-12");
    for (const ChannelState& s : states_) {
        check_gain(s.g11, "g11");
        check_gain(s.g12, "g12");
        check_gain(s.g21, "g21");
        check_gain(s.g22, "g22");
    }
}

StateEnsemble make_discrete_ensemble(std::vector<ChannelState> states,
                                     std::vector<double> weights) {
    Provenance p;
    p.kind = Provenance::Kind::ExactEnumeration;
    return StateEnsemble(std::move(states), std::move(weights), std::move(p));
}

StateEnsemble make_singleton_ensemble(const ChannelState& state) {
    return make_discrete_ensemble({state}, {1.0});
}

StateEnsemble sample_rayleigh_ensemble(const std::array<double, 4>& sigmas, std::size_t n,
                                       std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_rayleigh_ensemble: n must be >= 1");
    for (double s : sigmas)
        if (!std::isfinite(s) || s < 0.0)
            throw std::invalid_argument("sample_rayleigh_ensemble: sigmas must be finite and >= 0");

    SplitMix64 rng(seed);
    std::vector<ChannelState> states;
    states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // draw order per point: g11, g12, g21, g22
        const double g11 = rayleigh_from_uniform(sigmas[0], rng.uniform01());
        const double g12 = rayleigh_from_uniform(sigmas[1], rng.uniform01());
        const double g21 = rayleigh_from_uniform(sigmas[2], rng.uniform01());
        const double g22 = rayleigh_from_uniform(sigmas[3], rng.uniform01());
        states.push_back(ChannelState{g11, g12, g21, g22});
    }
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    // Equal weights 1/n can sum to a few ulps off 1 for odd n; rebalance the
    // last weight so the strict constructor invariant holds bit-stably.
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) sum += weights[i];
    weights[n - 1] = 1.0 - sum;

    Provenance p;
    p.kind = Provenance::Kind::Sampled;
    p.sampler = "rayleigh-iid";
    p.rng = kRngAlgorithm;
    p.seed = seed;
    p.n = n;
    p.sigmas = sigmas;
    return StateEnsemble(std::move(states), std::move(weights), std::move(p));
}

Budget make_budget(double p1, double p2) {
    if (!std::isfinite(p1) || p1 < 0.0 || !std::isfinite(p2) || p2 < 0.0)
        throw std::invalid_argument("Budget: powers must be finite and >= 0");
    return Budget{p1, p2};
}

}  // namespace fic
