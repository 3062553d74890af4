#ifndef FIC_POLICY_HPP
#define FIC_POLICY_HPP

#include <cstddef>
#include <vector>

#include "fic/csit.hpp"
#include "fic/ensemble.hpp"

namespace fic {

// Power allocation per CSIT symbol: phi(e) >= 0. Budget feasibility is a
// property of the bound ensemble (E[phi(E)] <= P) and is checked by callers,
// not here.
class PowerPolicy {
public:
    PowerPolicy(CsitMap csit, std::vector<double> values_per_symbol);

    const CsitMap& csit() const { return csit_; }
    const std::vector<double>& values() const { return values_; }
    double value_for_symbol(int symbol) const { return values_[static_cast<std::size_t>(symbol)]; }
    double value_at_point(std::size_t point) const {
        return values_[static_cast<std::size_t>(csit_.label(point))];
    }

    double expected_power(const StateEnsemble& ensemble) const;
    bool within_budget(const StateEnsemble& ensemble, double budget,
                       double tol = 1e-9) const;

    static PowerPolicy uniform(const CsitMap& csit, double power);

private:
    CsitMap csit_;
    std::vector<double> values_;
};

// Private-power fraction in [0, 1]. Csit-indexed for the achievable region,
// state-indexed (one value per support point) for the full outer bound.
class SplitPolicy {
public:
    enum class Domain { CsitIndexed, StateIndexed };

    static SplitPolicy csit_indexed(CsitMap csit, std::vector<double> values_per_symbol);
    static SplitPolicy csit_constant(const CsitMap& csit, double value);
    static SplitPolicy state_indexed(std::vector<double> values_per_point);
    static SplitPolicy state_constant(std::size_t n_points, double value);

    Domain domain() const { return domain_; }
    const CsitMap& csit() const { return csit_; }
    const std::vector<double>& values() const { return values_; }

    double value_at_point(std::size_t point) const {
        return domain_ == Domain::StateIndexed
                   ? values_[point]
                   : values_[static_cast<std::size_t>(csit_.label(point))];
    }
    double value_for_symbol(int symbol) const {
        return values_[static_cast<std::size_t>(symbol)];
    }

private:
    SplitPolicy(Domain domain, CsitMap csit, std::vector<double> values);

    Domain domain_;
    CsitMap csit_;  // empty for state-indexed policies
    std::vector<double> values_;
};

}  // namespace fic

#endif
