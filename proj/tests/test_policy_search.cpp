#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fic/policy_search.hpp"
#include "oracles.hpp"

using namespace fic;

namespace {

bool contains_values(const std::vector<PowerPolicy>& policies,
                     const std::vector<double>& values) {
    for (const PowerPolicy& p : policies) {
        bool equal = p.values().size() == values.size();
        for (std::size_t k = 0; equal && k < values.size(); ++k)
            equal = std::abs(p.values()[k] - values[k]) <= 1e-12;
        if (equal) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("feasible power policies") {
    SUBCASE("single symbol, quarter steps") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0, 0, 1});
        const CsitMap c = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const std::vector<PowerPolicy> ps =
            feasible_power_policies(e, c, 1.0, PolicyGrid{0.25, 0.25, 4.0});
        REQUIRE(ps.size() == 5);
        for (double v : {0.0, 0.25, 0.5, 0.75, 1.0}) CHECK(contains_values(ps, {v}));
    }
    SUBCASE("two equiprobable symbols allow power concentration") {
        const StateEnsemble e = make_discrete_ensemble(
            {ChannelState{1, 0, 0.5, 1}, ChannelState{1, 0, 2.0, 1}}, {0.5, 0.5});
        const CsitMap c = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::inr_magnitude());
        REQUIRE(c.alphabet_size() == 2);
        const std::vector<PowerPolicy> ps =
            feasible_power_policies(e, c, 1.0, PolicyGrid{0.5, 0.25, 4.0});
        // oracle: enumerate the same grid directly and filter by expectation
        std::size_t expected = 0;
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= 8; ++j)
                if (0.5 * (0.5 * i) + 0.5 * (0.5 * j) <= 1.0 + 1e-9) ++expected;
        CHECK(ps.size() == expected);
        CHECK(contains_values(ps, {2.0, 0.0}));
        CHECK(contains_values(ps, {1.0, 1.0}));
        for (const PowerPolicy& p : ps) CHECK(p.within_budget(e, 1.0));
    }
    SUBCASE("zero budget leaves only the zero policy") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0, 0, 1});
        const CsitMap c = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const std::vector<PowerPolicy> ps =
            feasible_power_policies(e, c, 0.0, PolicyGrid{0.25, 0.25, 4.0});
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].values()[0] == 0.0);
    }
    SUBCASE("full power appears even off the step grid") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0, 0, 1});
        const CsitMap c = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const std::vector<PowerPolicy> ps =
            feasible_power_policies(e, c, 1.0, PolicyGrid{0.3, 0.25, 4.0});
        CHECK(contains_values(ps, {1.0}));
    }
    SUBCASE("bad grids are rejected") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0, 0, 1});
        const CsitMap c = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        CHECK_THROWS_AS(feasible_power_policies(e, c, 1.0, PolicyGrid{0.0, 0.25, 4.0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(feasible_power_policies(e, c, 1.0, PolicyGrid{0.25, 0.25, 0.5}),
                        std::invalid_argument);
    }
}

TEST_CASE("interference-aware split assignment") {
    SUBCASE("clamps at the noise floor") {
        // g21^2 phi1 = 4 -> alpha = 0.25; g12^2 phi2 = 0.5 -> beta = 1
        const StateEnsemble e =
            make_singleton_ensemble(ChannelState{1, std::sqrt(0.5), 2, 1});
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        const auto [alpha, beta] =
            etw_split_policy(e, PowerPolicy::uniform(c1, 1.0), PowerPolicy::uniform(c2, 1.0));
        CHECK(alpha.value_for_symbol(0) == doctest::Approx(0.25));
        CHECK(beta.value_for_symbol(0) == doctest::Approx(1.0));
    }
    SUBCASE("zero cross gain means fully private") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0, 0, 1});
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        const auto [alpha, beta] =
            etw_split_policy(e, PowerPolicy::uniform(c1, 5.0), PowerPolicy::uniform(c2, 5.0));
        CHECK(alpha.value_for_symbol(0) == 1.0);
        CHECK(beta.value_for_symbol(0) == 1.0);
    }
    SUBCASE("hypothesis violation is a distinct error") {
        const StateEnsemble e = make_discrete_ensemble(
            {ChannelState{1, 0.3, 0.5, 1}, ChannelState{1, 0.3, 2.0, 1}}, {0.5, 0.5});
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        CHECK_THROWS_AS(
            etw_split_policy(e, PowerPolicy::uniform(c1, 1.0), PowerPolicy::uniform(c2, 1.0)),
            HypothesisError);
    }
    SUBCASE("values stay in [0,1] and hit 1 at or below the noise floor") {
        SplitMix64 rng(61);
        for (int trial = 0; trial < 30; ++trial) {
            const StateEnsemble e = testing::random_ensemble(rng, 10);
            const CsitMap c1 = testing::random_inr_refining_csit(rng, e, Transmitter::Tx1);
            const CsitMap c2 = testing::random_inr_refining_csit(rng, e, Transmitter::Tx2);
            const PowerPolicy f1 = testing::random_feasible_policy(rng, e, c1, 3.0);
            const PowerPolicy f2 = testing::random_feasible_policy(rng, e, c2, 3.0);
            const auto [alpha, beta] = etw_split_policy(e, f1, f2);
            for (std::size_t i = 0; i < e.size(); ++i) {
                const double a = alpha.value_at_point(i);
                const double inr = e.state(i).g21 * e.state(i).g21 * f1.value_at_point(i);
                CHECK(a >= 0.0);
                CHECK(a <= 1.0);
                if (inr <= 1.0) CHECK(a == 1.0);
            }
        }
    }
}

TEST_CASE("weighted sum maximization") {
    SUBCASE("no interference: full power on both, value psi(1)+psi(1)") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0, 0, 1});
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        const SearchResult coarse = maximize_weighted_sum(
            BoundKind::InnerEq2, e, c1, c2, Budget{1, 1}, 1, 1, PolicyGrid{0.25, 0.25, 4.0});
        CHECK(coarse.value == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(coarse.phi1.values()[0] == doctest::Approx(1.0));
        CHECK(coarse.phi2.values()[0] == doctest::Approx(1.0));
        // finer grid oracle at step 0.05 agrees that the maximum sits at full power
        const SearchResult fine = maximize_weighted_sum(
            BoundKind::InnerEq2, e, c1, c2, Budget{1, 1}, 1, 1, PolicyGrid{0.05, 0.5, 4.0});
        CHECK(fine.value == doctest::Approx(coarse.value).epsilon(1e-12));
    }
    SUBCASE("zero budget gives the origin") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0.5, 0.5, 1});
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        const SearchResult r = maximize_weighted_sum(
            BoundKind::InnerEq2, e, c1, c2, Budget{0, 0}, 1, 1, PolicyGrid{0.25, 0.25, 4.0});
        CHECK(r.value == 0.0);
    }
    SUBCASE("symmetric instances are orientation invariant") {
        SplitMix64 rng(71);
        for (int trial = 0; trial < 5; ++trial) {
            const double cross = testing::rand_unif(rng, 0.1, 2.0);
            const double direct = testing::rand_unif(rng, 0.5, 1.5);
            const StateEnsemble e =
                make_singleton_ensemble(ChannelState{direct, cross, cross, direct});
            const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
            const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
            const double p = testing::rand_unif(rng, 0.5, 3.0);
            const SearchResult fwd = maximize_weighted_sum(
                BoundKind::InnerEq2, e, c1, c2, Budget{p, p}, 1, 1, PolicyGrid{0.5, 0.5, 2.0});
            // swapping the transmitters maps the instance onto itself
            const SearchResult swapped = maximize_weighted_sum(
                BoundKind::InnerEq2, e, c2, c1, Budget{p, p}, 1, 1, PolicyGrid{0.5, 0.5, 2.0});
            CHECK(std::abs(fwd.value - swapped.value) <= 1e-9);
        }
    }
    SUBCASE("refinement never loses to the grid and keeps the budget") {
        SplitMix64 rng(73);
        for (int trial = 0; trial < 6; ++trial) {
            const StateEnsemble e = testing::random_ensemble(rng, 4);
            const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
            const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
            const Budget b{1.5, 1.5};
            const PolicyGrid grid{0.5, 0.5, 2.0};
            const SearchResult plain = maximize_weighted_sum(
                BoundKind::InnerEq2, e, c1, c2, b, 1, 0.7, grid);
            SearchOptions opt;
            opt.refine_rounds = 2;
            const SearchResult refined = maximize_weighted_sum(
                BoundKind::InnerEq2, e, c1, c2, b, 1, 0.7, grid, opt);
            CHECK(refined.value >= plain.value - 1e-12);
            CHECK(refined.phi1.within_budget(e, b.p1));
            CHECK(refined.phi2.within_budget(e, b.p2));
        }
    }
    SUBCASE("halving the power step never lowers the value") {
        SplitMix64 rng(79);
        for (int trial = 0; trial < 5; ++trial) {
            const StateEnsemble e = testing::random_ensemble(rng, 3);
            const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
            const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
            const Budget b{2.0, 2.0};
            const SearchResult coarse = maximize_weighted_sum(
                BoundKind::OuterEq45, e, c1, c2, b, 0.6, 1, PolicyGrid{0.5, 0.5, 2.0});
            const SearchResult fine = maximize_weighted_sum(
                BoundKind::OuterEq45, e, c1, c2, b, 0.6, 1, PolicyGrid{0.25, 0.5, 2.0});
            CHECK(fine.value >= coarse.value - 1e-12);
        }
    }
}

TEST_CASE("boundary tracing") {
    SUBCASE("no-interference singleton traces the full-power rectangle") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0, 0, 1});
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        const RateRegion r = trace_boundary(BoundKind::InnerEq2, e, c1, c2, Budget{3, 1}, 33,
                                            PolicyGrid{0.25, 0.25, 4.0});
        CHECK(r.support.front() == doctest::Approx(2.0).epsilon(1e-12));  // psi(3) at w=(1,0)
        CHECK(r.support.back() == doctest::Approx(1.0).epsilon(1e-12));   // psi(1) at w=(0,1)
        CHECK(contains_point(r, RatePoint{2.0, 1.0}));
    }
    SUBCASE("relaxed outer dominates inner in every direction") {
        SplitMix64 rng(83);
        for (int trial = 0; trial < 4; ++trial) {
            const StateEnsemble e = testing::random_ensemble(rng, 3);
            const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
            const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
            const Budget b{1.0, 1.0};
            const PolicyGrid grid{0.5, 0.5, 2.0};
            const RateRegion inner =
                trace_boundary(BoundKind::InnerEq2, e, c1, c2, b, 33, grid);
            const RateRegion outer =
                trace_boundary(BoundKind::OuterEq45, e, c1, c2, b, 33, grid);
            for (std::size_t j = 0; j < inner.support.size(); ++j)
                CHECK(inner.support[j] <= outer.support[j] + 1e-9);
        }
    }
    SUBCASE("interface floor of four directions") {
        const StateEnsemble e = make_singleton_ensemble(ChannelState{1, 0.5, 0.5, 1});
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        const RateRegion r = trace_boundary(BoundKind::OuterEq45, e, c1, c2, Budget{1, 1}, 4,
                                            PolicyGrid{0.5, 0.5, 2.0});
        CHECK(r.angles.size() == 4);
        CHECK_THROWS_AS(trace_boundary(BoundKind::OuterEq45, e, c1, c2, Budget{1, 1}, 3,
                                       PolicyGrid{0.5, 0.5, 2.0}),
                        std::invalid_argument);
    }
    SUBCASE("thread count does not change results") {
        const StateEnsemble e = sample_rayleigh_ensemble({1, 0.15, 0.15, 1}, 64, 5);
        const CsitMap c1 = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        const CsitMap c2 = csit_from_quantizer(e, Transmitter::Tx2, QuantizerSpec::none());
        SearchOptions serial;
        serial.threads = 1;
        SearchOptions parallel;
        parallel.threads = 4;
        const RateRegion a = trace_boundary(BoundKind::InnerEq2, e, c1, c2, Budget{1, 1}, 17,
                                            PolicyGrid{0.5, 0.5, 2.0}, serial);
        const RateRegion b = trace_boundary(BoundKind::InnerEq2, e, c1, c2, Budget{1, 1}, 17,
                                            PolicyGrid{0.5, 0.5, 2.0}, parallel);
        for (std::size_t j = 0; j < a.support.size(); ++j) CHECK(a.support[j] == b.support[j]);
    }
}
