#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "obstructa/canonical.hpp"
#include "obstructa/detectors.hpp"
#include "obstructa/enumeration.hpp"
#include "obstructa/families.hpp"
#include "obstructa/hamiltonicity.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace obstructa;

namespace {

bool wheel_valid(const Graph& g, const WheelWitness& w) {
    const Mask rim = VertexSet::from(w.rim).bits();
    if (rim & bit(w.hub)) return false;
    return oracle::is_cycle_within(g, rim) && popcount(g.row(w.hub) & rim) >= 3;
}

}  // namespace

TEST_CASE("wheel detection examples") {
    const auto k4 = find_induced_wheel(complete_graph(4));
    REQUIRE(k4);
    CHECK(k4->hub == 0);
    CHECK(k4->rim == std::vector<int>{1, 2, 3});

    CHECK_FALSE(find_induced_wheel(build_short_variant(ShortKind::ShortPrism, {1, 1, 1})));

    const Graph fig = build_wheel({6, {0, 2, 4}});
    const auto w = find_induced_wheel(fig);
    REQUIRE(w);
    CHECK(wheel_valid(fig, *w));
    CHECK(is_wheel_free(cycle_graph(8)));
}

TEST_CASE("3PC detection examples") {
    const Graph t = build_3pc({ThreePcKind::Theta, {2, 2, 3}, 0});
    const auto self = find_induced_3pc(t);
    REQUIRE(self);
    CHECK(self->embedding.bits() == t.vertices());
    CHECK(self->spec == ThreePcSpec{ThreePcKind::Theta, {2, 2, 3}, 0});

    const Graph k33 = complete_bipartite(3, 3);
    const auto hit = find_induced_3pc(k33);
    REQUIRE(hit);
    CHECK(hit->spec == ThreePcSpec{ThreePcKind::Theta, {2, 2, 2}, 0});
    CHECK(hit->embedding.size() == 5);
    CHECK(recognize_3pc(induced_subgraph(k33, hit->embedding).graph) == hit->spec);

    CHECK_FALSE(find_induced_3pc(cycle_graph(7)));
    CHECK(code_of([] { find_induced_3pc(Graph(21)); }) == ErrorCode::TooLarge);

    const FamilyFilter prisms = family_bit(ThreePcFamily::Prism);
    CHECK_FALSE(find_induced_3pc(k33, prisms));
}

TEST_CASE("classification records") {
    const auto k23 = classify(complete_bipartite(2, 3));
    CHECK(k23 == ClassificationRecord{true, true, true, false, true, ThreePcSpec{ThreePcKind::Theta, {2, 2, 2}, 0}});

    const auto tp = classify(build_short_variant(ShortKind::ShortPrism, {1, 1, 1}));
    CHECK(tp == ClassificationRecord{true, true, false, true, false, std::nullopt});

    const auto k4 = classify(complete_graph(4));
    CHECK(k4 == ClassificationRecord{true, false, false, true, false, std::nullopt});

    CHECK(code_of([] { classify(Graph(17)); }) == ErrorCode::TooLarge);
}

TEST_CASE("detectors agree with subset oracles up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            const auto w = find_induced_wheel(g);
            CHECK(w.has_value() == oracle::has_wheel(g));
            if (w) CHECK(wheel_valid(g, *w));

            const auto p = find_induced_3pc(g);
            CHECK(p.has_value() == oracle::contains_three_pc(g));
            if (p) CHECK(oracle::is_three_pc(induced_subgraph(g, p->embedding).graph));

            CHECK(recognize_3pc(g).has_value() == oracle::is_three_pc(g));
            return false;
        });
    }
}

TEST_CASE("record invariants on random graphs") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 8), 0.4, rng);
        const auto r = classify(g);
        if (r.hc_obstruction) CHECK((r.two_connected && !r.hamiltonian));
        if (r.recognized_3pc) CHECK(r.contains_3pc);
    }
}
