#include "fic/csit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace fic {

CsitMap::CsitMap(std::vector<int> labels, int alphabet_size, std::string description)
    : labels_(std::move(labels)), alphabet_size_(alphabet_size),
      description_(std::move(description)) {
    if (labels_.empty()) throw std::invalid_argument("CsitMap: empty label list");
    if (alphabet_size_ <= 0) throw std::invalid_argument("CsitMap: empty alphabet");
    for (int l : labels_)
        if (l < 0 || l >= alphabet_size_)
            throw std::invalid_argument("CsitMap: label outside alphabet");
}

namespace {

// Dense ranks of the distinct keys, in sorted key order. Equal keys share a
// rank, so the map is deterministic on states.
template <class Key>
std::pair<std::vector<int>, int> rank_labels(const std::vector<Key>& keys) {
    std::vector<Key> distinct(keys);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> labels;
    labels.reserve(keys.size());
    for (const Key& k : keys) {
        const auto it = std::lower_bound(distinct.begin(), distinct.end(), k);
        labels.push_back(static_cast<int>(it - distinct.begin()));
    }
    return {std::move(labels), static_cast<int>(distinct.size())};
}

}  // namespace

CsitMap csit_from_quantizer(const StateEnsemble& ensemble, Transmitter tx,
                            const QuantizerSpec& spec) {
    const std::size_t n = ensemble.size();
    const CrossLink link = own_cross_link(tx);

    switch (spec.feature) {
        case CsitFeature::None:
            return CsitMap(std::vector<int>(n, 0), 1, "none");

        case CsitFeature::InrMagnitude: {
            std::vector<double> keys;
            keys.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                keys.push_back(cross_gain(ensemble.state(i), link));
            auto [labels, count] = rank_labels(keys);
            return CsitMap(std::move(labels), count, "inr-magnitude");
        }

        case CsitFeature::FullState: {
            using Key = std::tuple<double, double, double, double>;
            std::vector<Key> keys;
            keys.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                const ChannelState& s = ensemble.state(i);
                keys.emplace_back(s.g11, s.g12, s.g21, s.g22);
            }
            auto [labels, count] = rank_labels(keys);
            return CsitMap(std::move(labels), count, "full-state");
        }

        case CsitFeature::CustomBinning: {
            for (std::size_t i = 1; i < spec.edges.size(); ++i)
                if (!(spec.edges[i - 1] < spec.edges[i]))
                    throw std::invalid_argument("csit_from_quantizer: bin edges must be strictly increasing");
            // bin index of the own cross gain; occupied bins ranked densely
            std::vector<int> bins;
            bins.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                const double g = cross_gain(ensemble.state(i), link);
                const auto it = std::upper_bound(spec.edges.begin(), spec.edges.end(), g);
                bins.push_back(static_cast<int>(it - spec.edges.begin()));
            }
            auto [labels, count] = rank_labels(bins);
            return CsitMap(std::move(labels), count, "custom-binning");
        }
    }
    throw std::invalid_argument("csit_from_quantizer: unknown feature");
}

bool csit_determines_inr(const CsitMap& csit, const StateEnsemble& ensemble, CrossLink link) {
    if (csit.size() != ensemble.size())
        throw std::invalid_argument("csit_determines_inr: map not bound to this ensemble");
    std::vector<double> gain_of_symbol(static_cast<std::size_t>(csit.alphabet_size()), -1.0);
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const double g = cross_gain(ensemble.state(i), link);
        double& slot = gain_of_symbol[static_cast<std::size_t>(csit.label(i))];
        if (slot < 0.0)
            slot = g;
        else if (slot != g)
            return false;
    }
    return true;
}

}  // namespace fic
