#include "fic/policy.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fic {

PowerPolicy::PowerPolicy(CsitMap csit, std::vector<double> values_per_symbol)
    : csit_(std::move(csit)), values_(std::move(values_per_symbol)) {
    if (values_.size() != static_cast<std::size_t>(csit_.alphabet_size()))
        throw std::invalid_argument("PowerPolicy: one value per CSIT symbol required");
    for (double v : values_)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("PowerPolicy: powers must be finite and >= 0");
}

double PowerPolicy::expected_power(const StateEnsemble& ensemble) const {
    if (ensemble.size() != csit_.size())
        throw std::invalid_argument("PowerPolicy: policy not bound to this ensemble");
    double acc = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i)
        acc += ensemble.weight(i) * value_at_point(i);
    return acc;
}

bool PowerPolicy::within_budget(const StateEnsemble& ensemble, double budget, double tol) const {
    return expected_power(ensemble) <= budget + tol;
}

PowerPolicy PowerPolicy::uniform(const CsitMap& csit, double power) {
    return PowerPolicy(csit,
                       std::vector<double>(static_cast<std::size_t>(csit.alphabet_size()), power));
}

SplitPolicy::SplitPolicy(Domain domain, CsitMap csit, std::vector<double> values)
    : domain_(domain), csit_(std::move(csit)), values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v) || v < 0.0 || v > 1.0)
            throw std::invalid_argument("SplitPolicy: fractions must lie in [0, 1]");
}

SplitPolicy SplitPolicy::csit_indexed(CsitMap csit, std::vector<double> values_per_symbol) {
    if (values_per_symbol.size() != static_cast<std::size_t>(csit.alphabet_size()))
        throw std::invalid_argument("SplitPolicy: one value per CSIT symbol required");
    return SplitPolicy(Domain::CsitIndexed, std::move(csit), std::move(values_per_symbol));
}

SplitPolicy SplitPolicy::csit_constant(const CsitMap& csit, double value) {
    return csit_indexed(csit, std::vector<double>(static_cast<std::size_t>(csit.alphabet_size()),
                                                  value));
}

SplitPolicy SplitPolicy::state_indexed(std::vector<double> values_per_point) {
    if (values_per_point.empty())
        throw std::invalid_argument("SplitPolicy: empty state-indexed value list");
    return SplitPolicy(Domain::StateIndexed, CsitMap({0}, 1, "unused"),
                       std::move(values_per_point));
}

SplitPolicy SplitPolicy::state_constant(std::size_t n_points, double value) {
    return state_indexed(std::vector<double>(n_points, value));
}

}  // namespace fic
