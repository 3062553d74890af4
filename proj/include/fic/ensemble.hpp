#ifndef FIC_ENSEMBLE_HPP
#define FIC_ENSEMBLE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "fic/errors.hpp"

namespace fic {

// One fading support point: the four gain magnitudes of the 2x2 link matrix.
// g11/g22 are the direct links, g12 is the cross link into receiver 1 and
// g21 the cross link into receiver 2. Squared values are power gains
// relative to unit noise variance. Phases are never stored: every bound
// depends on |S|^2 only.
struct ChannelState {
    double g11 = 0.0;
    double g12 = 0.0;
    double g21 = 0.0;
    double g22 = 0.0;

    friend bool operator==(const ChannelState&, const ChannelState&) = default;
};

ChannelState make_channel_state(double g11, double g12, double g21, double g22);

// Where an ensemble came from; serialized so sampled runs are reproducible.
struct Provenance {
    enum class Kind { ExactEnumeration, Sampled };
    Kind kind = Kind::ExactEnumeration;
    // Sampled only:
    std::string sampler;  // e.g. "rayleigh-iid"
    std::string rng;      // e.g. "splitmix64"
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::array<double, 4> sigmas{0.0, 0.0, 0.0, 0.0};
};

// Finite weighted support over which every expectation in the bounds is
// taken exactly. Immutable after construction.
class StateEnsemble {
public:
    StateEnsemble(std::vector<ChannelState> states, std::vector<double> weights,
                  Provenance provenance);

    std::size_t size() const { return states_.size(); }
    const std::vector<ChannelState>& states() const { return states_; }
    const std::vector<double>& weights() const { return weights_; }
    const ChannelState& state(std::size_t i) const { return states_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }
    const Provenance& provenance() const { return provenance_; }

private:
    std::vector<ChannelState> states_;
    std::vector<double> weights_;
    Provenance provenance_;
};

// Strict construction: weights must already sum to 1 within 1e-12. No silent
// renormalization, so scenario files stay auditable.
StateEnsemble make_discrete_ensemble(std::vector<ChannelState> states,
                                     std::vector<double> weights);

StateEnsemble make_singleton_ensemble(const ChannelState& state);

// n i.i.d. support points with independent Rayleigh gains of scales
// sigmas = (s11, s12, s21, s22), equal weights 1/n. Per point the four gains
// are drawn in the order g11, g12, g21, g22 from one splitmix64 stream.
StateEnsemble sample_rayleigh_ensemble(const std::array<double, 4>& sigmas, std::size_t n,
                                       std::uint64_t seed);

// Average transmit power limits.
struct Budget {
    double p1 = 0.0;
    double p2 = 0.0;
};

Budget make_budget(double p1, double p2);

// Exact expectation over the support, accumulated in support order.
// f must be finite at every point; a non-finite value is reported with the
// offending index (and the caller's context string).
template <class F>
double expect(const StateEnsemble& ensemble, F&& f, const std::string& context = "") {
    double acc = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const double v = f(ensemble.state(i), i);
        if (!std::isfinite(v)) throw NonFiniteValueError(i, context);
        acc += ensemble.weight(i) * v;
    }
    return acc;
}

}  // namespace fic

#endif
