#include <doctest.h>

#include <cmath>

#include "fic/geometry.hpp"
#include "oracles.hpp"

using namespace fic;

namespace {

RatePolytope tri() {
    return make_rate_polytope({make_rate_constraint(1, 0, 1.0, "r1"),
                               make_rate_constraint(0, 1, 1.0, "r2"),
                               make_rate_constraint(1, 1, 1.5, "sum")},
                              "demo");
}

bool has_vertex(const std::vector<RatePoint>& vs, double r1, double r2) {
    for (const RatePoint& v : vs)
        if (std::abs(v.r1 - r1) <= 1e-9 && std::abs(v.r2 - r2) <= 1e-9) return true;
    return false;
}

}  // namespace

TEST_CASE("support_value on the clipped square") {
    const RatePolytope p = tri();
    CHECK(support_value(p, 1, 1) == doctest::Approx(1.5));
    CHECK(support_value(p, 1, 0) == doctest::Approx(1.0));
    CHECK(support_value(p, 2, 1) == doctest::Approx(2.5));  // vertex (1, 0.5)
    CHECK_THROWS_AS(support_value(p, 0, 0), std::invalid_argument);
    const RatePolytope open =
        make_rate_polytope({make_rate_constraint(1, 0, 1.0, "r1")}, "open");
    CHECK(support_value(open, 1, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(support_value(open, 1, 1), UnboundedRegionError);
}

TEST_CASE("vertex enumeration") {
    SUBCASE("clipped square") {
        const std::vector<RatePoint> vs = vertices(tri());
        CHECK(vs.size() == 5);
        CHECK(has_vertex(vs, 0, 0));
        CHECK(has_vertex(vs, 0, 1));
        CHECK(has_vertex(vs, 0.5, 1));
        CHECK(has_vertex(vs, 1, 0.5));
        CHECK(has_vertex(vs, 1, 0));
        for (std::size_t k = 1; k < vs.size(); ++k) CHECK(vs[k - 1].r1 <= vs[k].r1);
    }
    SUBCASE("plain square") {
        const RatePolytope p = make_rate_polytope(
            {make_rate_constraint(1, 0, 2.0, "r1"), make_rate_constraint(0, 1, 2.0, "r2")}, "sq");
        const std::vector<RatePoint> vs = vertices(p);
        CHECK(vs.size() == 4);
        CHECK(has_vertex(vs, 2, 2));
    }
    SUBCASE("degenerate segment") {
        const RatePolytope p = make_rate_polytope(
            {make_rate_constraint(1, 0, 0.0, "r1"), make_rate_constraint(0, 1, 1.0, "r2")}, "seg");
        const std::vector<RatePoint> vs = vertices(p);
        CHECK(vs.size() == 2);
        CHECK(has_vertex(vs, 0, 0));
        CHECK(has_vertex(vs, 0, 1));
    }
    SUBCASE("unbounded region is rejected") {
        const RatePolytope p =
            make_rate_polytope({make_rate_constraint(1, 0, 1.0, "r1")}, "open");
        CHECK_THROWS_AS(vertices(p), UnboundedRegionError);
    }
    SUBCASE("matches the membership-grid oracle on random polytopes") {
        SplitMix64 rng(101);
        for (int trial = 0; trial < 30; ++trial) {
            const RatePolytope p = testing::random_polytope(rng);
            const std::vector<RatePoint> vs = vertices(p);
            for (const RatePoint& v : vs) CHECK(polytope_contains(p, v));
            for (const double angle : direction_grid(37)) {
                const double w1 = std::cos(angle), w2 = std::sin(angle);
                const double wsum = w1 + w2;
                double sv = 0.0;
                for (const RatePoint& v : vs) sv = std::max(sv, w1 * v.r1 + w2 * v.r2);
                const double oracle = testing::oracle_grid_support(p, w1 / wsum, w2 / wsum, 1e-3);
                CHECK(std::abs(sv / wsum - oracle) <= 1e-3 + 1e-9);
            }
        }
    }
}

TEST_CASE("union regions") {
    const RatePolytope wide = make_rate_polytope(
        {make_rate_constraint(1, 0, 2.0, "r1"), make_rate_constraint(0, 1, 1.0, "r2")}, "wide");
    const RatePolytope tall = make_rate_polytope(
        {make_rate_constraint(1, 0, 1.0, "r1"), make_rate_constraint(0, 1, 2.0, "r2")}, "tall");

    SUBCASE("singleton union reproduces the member") {
        const RateRegion r = union_region({wide}, 9);
        for (std::size_t j = 0; j < r.angles.size(); ++j) {
            const double w1 = std::cos(r.angles[j]), w2 = std::sin(r.angles[j]);
            CHECK(r.support[j] == doctest::Approx(support_value(wide, w1, w2)).epsilon(1e-12));
        }
    }
    SUBCASE("hull support vs exact membership") {
        const RateRegion r = union_region({wide, tall}, 721);
        // diagonal support is the time-sharing hull value
        CHECK(r.support[360] == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-9));
        CHECK_FALSE(contains_point(r, RatePoint{1.4, 1.4}));
        CHECK(contains_point(r, RatePoint{2.0, 1.0}));  // boundary of a member
        CHECK(contains_point(r, RatePoint{0.0, 0.0}));
    }
    SUBCASE("duplicated member is idempotent") {
        const RateRegion once = union_region({wide}, 33);
        const RateRegion twice = union_region({wide, wide}, 33);
        for (std::size_t j = 0; j < once.support.size(); ++j)
            CHECK(once.support[j] == twice.support[j]);
    }
    SUBCASE("adding members never lowers the support") {
        SplitMix64 rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const RatePolytope a = testing::random_polytope(rng);
            const RatePolytope b = testing::random_polytope(rng);
            const RateRegion ra = union_region({a}, 65);
            const RateRegion rab = union_region({a, b}, 65);
            for (std::size_t j = 0; j < ra.support.size(); ++j)
                CHECK(rab.support[j] >= ra.support[j] - 1e-12);
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(union_region({}, 8), std::invalid_argument);
        CHECK_THROWS_AS(union_region({wide}, 3), std::invalid_argument);
        const RatePolytope open =
            make_rate_polytope({make_rate_constraint(1, 0, 1.0, "r1")}, "open");
        CHECK_THROWS_AS(union_region({open}, 8), UnboundedRegionError);
    }
}

TEST_CASE("shifted containment") {
    const RatePolytope big = make_rate_polytope(
        {make_rate_constraint(1, 0, 2.0, "r1"), make_rate_constraint(0, 1, 2.0, "r2")}, "big");
    const RatePolytope small = make_rate_polytope(
        {make_rate_constraint(1, 0, 1.0, "r1"), make_rate_constraint(0, 1, 1.0, "r2")}, "small");

    SUBCASE("reflexive at zero shift") {
        CHECK(shifted_containment(big, big, 0.0).pass);
        SplitMix64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            const RatePolytope p = testing::random_polytope(rng);
            CHECK(shifted_containment(p, p, 0.0).pass);
        }
    }
    SUBCASE("exact shift passes with zero margin") {
        const ShiftedContainmentReport rep = shifted_containment(big, small, 1.0);
        CHECK(rep.pass);
        CHECK(rep.worst_violation == doctest::Approx(0.0));
    }
    SUBCASE("insufficient shift fails at the far corner") {
        const ShiftedContainmentReport rep = shifted_containment(big, small, 0.5);
        CHECK_FALSE(rep.pass);
        CHECK(rep.worst_violation == doctest::Approx(0.5));
        bool corner_failed = false;
        for (const ShiftedVertexRecord& rec : rep.records)
            if (std::abs(rec.vertex.r1 - 2.0) <= 1e-12 && std::abs(rec.vertex.r2 - 2.0) <= 1e-12)
                corner_failed = !rec.contained;
        CHECK(corner_failed);
    }
}
