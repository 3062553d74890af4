#ifndef FIC_CSIT_HPP
#define FIC_CSIT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fic/ensemble.hpp"

namespace fic {

enum class Transmitter { Tx1, Tx2 };

// Cross links by the receiver they land on. ToRx2 is g21 (transmitter 1's
// interference), ToRx1 is g12 (transmitter 2's).
enum class CrossLink { ToRx2, ToRx1 };

inline CrossLink own_cross_link(Transmitter tx) {
    return tx == Transmitter::Tx1 ? CrossLink::ToRx2 : CrossLink::ToRx1;
}

inline double cross_gain(const ChannelState& s, CrossLink link) {
    return link == CrossLink::ToRx2 ? s.g21 : s.g12;
}

// Deterministic quantizer of the channel state into CSIT symbols.
enum class CsitFeature { None, InrMagnitude, FullState, CustomBinning };

struct QuantizerSpec {
    CsitFeature feature = CsitFeature::None;
    std::vector<double> edges;  // CustomBinning only; strictly increasing

    static QuantizerSpec none() { return {CsitFeature::None, {}}; }
    static QuantizerSpec inr_magnitude() { return {CsitFeature::InrMagnitude, {}}; }
    static QuantizerSpec full_state() { return {CsitFeature::FullState, {}}; }
    static QuantizerSpec custom_binning(std::vector<double> edges) {
        return {CsitFeature::CustomBinning, std::move(edges)};
    }
};

// Per-support-point symbol labels for one transmitter. Labels are dense
// indices 0..alphabet_size()-1. The map is a deterministic function of the
// ChannelState fields, so equal support points always share a label.
class CsitMap {
public:
    CsitMap(std::vector<int> labels, int alphabet_size, std::string description);

    std::size_t size() const { return labels_.size(); }
    int label(std::size_t point) const { return labels_[point]; }
    const std::vector<int>& labels() const { return labels_; }
    int alphabet_size() const { return alphabet_size_; }
    const std::string& description() const { return description_; }

    friend bool operator==(const CsitMap& a, const CsitMap& b) {
        return a.labels_ == b.labels_ && a.alphabet_size_ == b.alphabet_size_;
    }

private:
    std::vector<int> labels_;
    int alphabet_size_ = 0;
    std::string description_;
};

// Build the CSIT map for one transmitter over the ensemble support.
//   none           -> a single symbol (no CSIT)
//   inr-magnitude  -> one symbol per distinct value of the transmitter's own
//                     cross gain (g21 for tx1, g12 for tx2)
//   full-state     -> one symbol per distinct ChannelState
//   custom-binning -> bin index of the own cross gain against `edges`
CsitMap csit_from_quantizer(const StateEnsemble& ensemble, Transmitter tx,
                            const QuantizerSpec& spec);

// True iff every CSIT symbol class is constant in the designated cross gain,
// i.e. the side information determines that interference-to-noise magnitude.
bool csit_determines_inr(const CsitMap& csit, const StateEnsemble& ensemble, CrossLink link);

}  // namespace fic

#endif
