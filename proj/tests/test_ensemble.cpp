#include <doctest.h>

#include <cmath>
#include <limits>

#include "fic/csit.hpp"
#include "fic/ensemble.hpp"
#include "fic/psi.hpp"
#include "fic/rng.hpp"
#include "oracles.hpp"

using namespace fic;

TEST_CASE("discrete ensemble construction") {
    const ChannelState s1{1, 0, 0, 1};
    const ChannelState s2{1, 0.5, 0.5, 1};

    SUBCASE("singleton") {
        const StateEnsemble e = make_discrete_ensemble({s1}, {1.0});
        CHECK(e.size() == 1);
        CHECK(e.weight(0) == 1.0);
    }
    SUBCASE("uniform pair preserves order") {
        const StateEnsemble e = make_discrete_ensemble({s1, s2}, {0.5, 0.5});
        CHECK(e.state(0) == s1);
        CHECK(e.state(1) == s2);
    }
    SUBCASE("rejected inputs") {
        CHECK_THROWS_AS(make_discrete_ensemble({}, {}), std::invalid_argument);
        CHECK_THROWS_AS(make_discrete_ensemble({s1}, {0.9}), std::invalid_argument);
        CHECK_THROWS_AS(make_discrete_ensemble({s1}, {-1.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_discrete_ensemble({s1, s2}, {1.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_channel_state(-0.1, 0, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("expectation engine") {
    const StateEnsemble pair = make_discrete_ensemble(
        {ChannelState{1, 0, 0, 1}, ChannelState{std::sqrt(3.0), 0, 0, 1}}, {0.5, 0.5});

    SUBCASE("hand-evaluated psi expectation") {
        const double v = expect(pair, [](const ChannelState& s, std::size_t) {
            return psi(s.g11 * s.g11);
        });
        CHECK(std::abs(v - 1.5) < 1e-12);  // 0.5*psi(1) + 0.5*psi(3)
    }
    SUBCASE("singleton is the identity") {
        const StateEnsemble single = make_singleton_ensemble(ChannelState{2, 0, 0, 1});
        CHECK(expect(single, [](const ChannelState& s, std::size_t) { return s.g11; }) == 2.0);
    }
    SUBCASE("zero function") {
        CHECK(expect(pair, [](const ChannelState&, std::size_t) { return 0.0; }) == 0.0);
    }
    SUBCASE("non-finite value reports the offending index") {
        try {
            expect(pair, [](const ChannelState&, std::size_t i) {
                return i == 1 ? std::numeric_limits<double>::infinity() : 0.0;
            });
            FAIL("expected NonFiniteValueError");
        } catch (const NonFiniteValueError& e) {
            CHECK(e.index() == 1);
        }
    }
    SUBCASE("linearity on random integrands") {
        SplitMix64 rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            const StateEnsemble e = testing::random_ensemble(rng, 12);
            const double a = testing::rand_unif(rng, -2, 2);
            const double b = testing::rand_unif(rng, -2, 2);
            auto f = [](const ChannelState& s, std::size_t) { return s.g11 + 2.0 * s.g12; };
            auto g = [](const ChannelState& s, std::size_t) { return s.g21 * s.g22; };
            const double lhs = expect(e, [&](const ChannelState& s, std::size_t i) {
                return a * f(s, i) + b * g(s, i);
            });
            const double rhs = a * expect(e, f) + b * expect(e, g);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("rayleigh sampling") {
    SUBCASE("inverse-CDF identity") {
        CHECK(std::abs(rayleigh_from_uniform(1.0, 1.0 - std::exp(-0.5)) - 1.0) < 1e-12);
        CHECK(rayleigh_from_uniform(0.0, 0.7) == 0.0);
        CHECK_THROWS_AS(rayleigh_from_uniform(-1.0, 0.5), std::invalid_argument);
    }
    SUBCASE("bitwise reproducibility") {
        const StateEnsemble a = sample_rayleigh_ensemble({1, 0.15, 0.15, 1}, 256, 99);
        const StateEnsemble b = sample_rayleigh_ensemble({1, 0.15, 0.15, 1}, 256, 99);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.state(i) == b.state(i));
            CHECK(a.weight(i) == b.weight(i));
        }
        CHECK(a.provenance().rng == "splitmix64");
    }
    SUBCASE("degenerate scale pins a link to zero") {
        const StateEnsemble e = sample_rayleigh_ensemble({1, 0, 0.15, 1}, 64, 3);
        for (const ChannelState& s : e.states()) CHECK(s.g12 == 0.0);
    }
    SUBCASE("second moment matches the closed form") {
        const StateEnsemble e = sample_rayleigh_ensemble({1, 0.15, 0.15, 1}, 4096, 7);
        const double mean_sq =
            expect(e, [](const ChannelState& s, std::size_t) { return s.g11 * s.g11; });
        CHECK(mean_sq == doctest::Approx(2.0).epsilon(0.05));  // E[X^2] = 2 sigma^2
    }
    SUBCASE("rejected inputs") {
        CHECK_THROWS_AS(sample_rayleigh_ensemble({1, 1, 1, 1}, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(sample_rayleigh_ensemble({1, -1, 1, 1}, 4, 1), std::invalid_argument);
    }
}

TEST_CASE("csit quantizers") {
    const StateEnsemble e = make_discrete_ensemble({ChannelState{1, 0.3, 0.5, 1},
                                                    ChannelState{1, 0.3, 0.5, 1},
                                                    ChannelState{1, 0.9, 2.0, 1}},
                                                   {0.25, 0.25, 0.5});

    SUBCASE("no CSIT collapses to one symbol") {
        const CsitMap m = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none());
        CHECK(m.alphabet_size() == 1);
        for (std::size_t i = 0; i < e.size(); ++i) CHECK(m.label(i) == 0);
    }
    SUBCASE("inr magnitude is a bijection on distinct cross gains") {
        const CsitMap m = csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::inr_magnitude());
        CHECK(m.alphabet_size() == 2);
        CHECK(m.label(0) == m.label(1));  // equal states share a label
        CHECK(m.label(0) != m.label(2));
    }
    SUBCASE("full state refines every other quantizer") {
        SplitMix64 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            const StateEnsemble r = testing::random_ensemble(rng, 10);
            const CsitMap full =
                csit_from_quantizer(r, Transmitter::Tx1, QuantizerSpec::full_state());
            for (const QuantizerSpec& spec :
                 {QuantizerSpec::none(), QuantizerSpec::inr_magnitude(),
                  QuantizerSpec::custom_binning({0.5, 1.0, 1.5})}) {
                const CsitMap other = csit_from_quantizer(r, Transmitter::Tx1, spec);
                for (std::size_t i = 0; i < r.size(); ++i)
                    for (std::size_t j = 0; j < r.size(); ++j)
                        if (full.label(i) == full.label(j))
                            CHECK(other.label(i) == other.label(j));
            }
        }
    }
    SUBCASE("custom binning validates edges") {
        CHECK_THROWS_AS(
            csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::custom_binning({1.0, 1.0})),
            std::invalid_argument);
        const CsitMap m = csit_from_quantizer(e, Transmitter::Tx1,
                                              QuantizerSpec::custom_binning({1.0}));
        CHECK(m.alphabet_size() == 2);  // 0.5 below the edge, 2.0 above
    }
}

TEST_CASE("csit_determines_inr") {
    const StateEnsemble e = make_discrete_ensemble(
        {ChannelState{1, 0.3, 0.5, 1}, ChannelState{1, 0.3, 2.0, 1}}, {0.5, 0.5});

    CHECK(csit_determines_inr(csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::full_state()),
                              e, CrossLink::ToRx2));
    CHECK(csit_determines_inr(csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::full_state()),
                              e, CrossLink::ToRx1));
    CHECK_FALSE(csit_determines_inr(
        csit_from_quantizer(e, Transmitter::Tx1, QuantizerSpec::none()), e, CrossLink::ToRx2));

    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const StateEnsemble r = testing::random_ensemble(rng, 10);
        CHECK(csit_determines_inr(
            csit_from_quantizer(r, Transmitter::Tx1, QuantizerSpec::inr_magnitude()), r,
            CrossLink::ToRx2));
        CHECK(csit_determines_inr(
            csit_from_quantizer(r, Transmitter::Tx2, QuantizerSpec::inr_magnitude()), r,
            CrossLink::ToRx1));
    }
}
