#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "obstructa/canonical.hpp"
#include "obstructa/certificate.hpp"
#include "obstructa/decomposition.hpp"
#include "obstructa/detectors.hpp"
#include "obstructa/enumeration.hpp"
#include "obstructa/families.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace obstructa;

namespace {

Graph theta(int a, int b, int c, bool chord = false) {
    return build_3pc({ThreePcKind::Theta, {a, b, c}, static_cast<std::uint8_t>(chord ? 1 : 0)});
}

Graph k4_with_ear() {
    Graph g = Graph(5);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    g.add_edge(0, 4);
    g.add_edge(1, 4);
    return g;
}

Graph triangular_prism() { return build_short_variant(ShortKind::ShortPrism, {1, 1, 1}); }

}  // namespace

TEST_CASE("degree-2 contraction") {
    const auto c6 = reduce_adjacent_degree2(cycle_graph(6));
    CHECK(c6.graph == complete_graph(3));
    CHECK(c6.log.size() == 3);

    const auto t = reduce_adjacent_degree2(theta(3, 3, 3));
    CHECK(recognize_3pc(t.graph) == ThreePcSpec{ThreePcKind::Theta, {2, 2, 2}, 0});

    const Graph prism = build_3pc({ThreePcKind::Prism, {2, 2, 2}, 0});
    const auto p = reduce_adjacent_degree2(prism);
    CHECK(p.log.empty());
    CHECK(p.graph == prism);

    CHECK(code_of([] { reduce_adjacent_degree2(path_graph(3)); }) == ErrorCode::NotTwoConnected);
}

TEST_CASE("special edges") {
    const auto ear = find_special_edges(k4_with_ear());
    REQUIRE(ear.size() == 1);
    CHECK(ear[0] == SpecialEdge{{0, 1}, 4});
    CHECK(find_special_edges(cycle_graph(5)).empty());

    const auto tp = find_special_edges(theta(2, 2, 2, true));
    REQUIRE(tp.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(tp[i] == SpecialEdge{{0, 1}, 2 + i});

    const auto r = reduce_special_edges(k4_with_ear());
    CHECK(r.graph == complete_graph(4));
    CHECK(r.removed.members() == std::vector<int>{4});

    const auto c5 = reduce_special_edges(cycle_graph(5));
    CHECK(c5.graph == cycle_graph(5));
    CHECK(c5.removed.empty());

    CHECK(code_of([] { reduce_special_edges(theta(2, 2, 2, true)); }) == ErrorCode::AmbiguousMidpoints);
    CHECK(code_of([] { find_special_edges(path_graph(4)); }) == ErrorCode::NotTwoConnected);
}

TEST_CASE("chordless graphs") {
    CHECK(is_chordless(path_graph(6)).chordless);
    CHECK(is_chordless(complete_bipartite(1, 5)).chordless);
    CHECK(is_chordless(cycle_graph(7)).chordless);
    CHECK(is_chordless(complete_bipartite(2, 6)).chordless);

    const auto k4 = is_chordless(complete_graph(4));
    CHECK_FALSE(k4.chordless);
    REQUIRE(k4.chord);
    CHECK(k4.cycle.size() == 4);
    // The cycle is real and passes through both ends of the chord.
    for (std::size_t i = 0; i < k4.cycle.size(); ++i)
        CHECK(complete_graph(4).adjacent(k4.cycle[i], k4.cycle[(i + 1) % k4.cycle.size()]));
    CHECK(std::count(k4.cycle.begin(), k4.cycle.end(), k4.chord->u) == 1);
    CHECK(std::count(k4.cycle.begin(), k4.cycle.end(), k4.chord->v) == 1);
}

TEST_CASE("chordless test agrees with cycle enumeration up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            // A chord exists iff some vertex set inducing more edges than a cycle
            // spans a Hamiltonian cycle in its induced graph.
            bool chord = false;
            for (Mask s = 1; s < bit(n) && !chord; ++s) {
                if (popcount(s) < 4) continue;
                const auto sub = induced_subgraph(g, VertexSet(s)).graph;
                if (sub.edge_count() > sub.n() && oracle::hamiltonian_cycle(sub)) chord = true;
            }
            const auto r = is_chordless(g);
            CHECK(r.chordless == !chord);
            return false;
        });
    }
}

TEST_CASE("2-sparse") {
    CHECK(is_two_sparse(theta(2, 2, 2)).two_sparse);
    const auto k4 = is_two_sparse(complete_graph(4));
    CHECK_FALSE(k4.two_sparse);
    CHECK(k4.violating_edge == Edge{0, 1});
    CHECK_FALSE(is_two_sparse(triangular_prism()).two_sparse);
}

TEST_CASE("proper 2-cutsets") {
    CHECK_FALSE(find_proper_2_cutset(theta(2, 2, 2)));
    CHECK_FALSE(find_proper_2_cutset(cycle_graph(6)));

    const Graph k26 = complete_bipartite(2, 6);
    const auto s = find_proper_2_cutset(k26);
    REQUIRE(s);
    CHECK(s->u == 0);
    CHECK(s->v == 1);
    CHECK(s->x.size() + s->y.size() == 6);
    CHECK(s->x.contains(2));
    CHECK(validate(k26, s->certificate()));

    CHECK(code_of([] { find_proper_2_cutset(Graph(3)); }) == ErrorCode::NotConnected);
}

TEST_CASE("2-edge cutsets") {
    CHECK(find_two_edge_cutsets(cycle_graph(4)).size() == 6);
    CHECK(find_two_edge_cutsets(triangular_prism()).empty());

    // K4 with edge 23 subdivided by vertex 4.
    Graph g = graph_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    const auto cuts = find_two_edge_cutsets(g);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].first == Edge{2, 4});
    CHECK(cuts[0].second == Edge{3, 4});
    CHECK(cuts[0].trivial_side);
}

TEST_CASE("line graph roots") {
    const auto c5 = recognize_line_graph(cycle_graph(5));
    REQUIRE(c5);
    CHECK(are_isomorphic(c5->root, cycle_graph(5)));

    const auto k3 = recognize_line_graph(complete_graph(3));
    REQUIRE(k3);
    CHECK(are_isomorphic(k3->root, complete_bipartite(1, 3)));

    CHECK_FALSE(recognize_line_graph(complete_bipartite(1, 3)));
    CHECK(code_of([] { recognize_line_graph(Graph(2)); }) == ErrorCode::NotConnected);

    const auto tp = recognize_line_graph(triangular_prism());
    REQUIRE(tp);
    CHECK(are_isomorphic(line_graph(tp->root).graph, triangular_prism()));
}

TEST_CASE("root soundness and uniqueness up to 7 vertices") {
    for (int n = 2; n <= 7; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            if (!is_connected(g)) return false;
            const auto r = recognize_line_graph(g);
            if (!r) return false;
            const auto lg = line_graph(r->root);
            CHECK(are_isomorphic(lg.graph, g));
            // The vertex map is an explicit isomorphism.
            for (int x = 0; x < g.n(); ++x) {
                for (int y = x + 1; y < g.n(); ++y) {
                    const Edge a = r->edge_of_vertex[x];
                    const Edge b = r->edge_of_vertex[y];
                    const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
                    CHECK(share == g.adjacent(x, y));
                }
            }
            if (g == complete_graph(3)) return false;
            const auto roots = all_line_graph_roots(g);
            for (const Graph& h : roots) CHECK(are_isomorphic(h, r->root));
            return false;
        });
    }
}

TEST_CASE("K4 minors") {
    CHECK(has_k4_minor(complete_graph(4)));
    const auto w = k4_subdivision_witness(complete_graph(4));
    REQUIRE(w);
    CHECK(w->parts[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(validate(complete_graph(4), *w));

    CHECK_FALSE(has_k4_minor(theta(2, 2, 2)));
    CHECK_FALSE(k4_subdivision_witness(theta(2, 2, 2)));
    CHECK(has_k4_minor(triangular_prism()));

    for (int n = 1; n <= 6; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            CHECK(has_k4_minor(g) == oracle::k4_minor(g));
            return false;
        });
    }
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 7), 0.35, rng);
        const auto cert = k4_subdivision_witness(g);
        CHECK(cert.has_value() == has_k4_minor(g));
        if (cert) CHECK(validate(g, *cert));
    }
}

TEST_CASE("only-prism dichotomy") {
    const auto tp = check_only_prism_dichotomy(triangular_prism());
    CHECK(tp.holds);
    CHECK(tp.branch == OnlyPrismBranch::LineGraphRoot);
    REQUIRE(tp.root);
    CHECK(are_isomorphic(line_graph(tp.root->root).graph, triangular_prism()));

    const auto thp = check_only_prism_dichotomy(theta(2, 2, 2, true));
    CHECK(thp.holds);
    CHECK(thp.branch == OnlyPrismBranch::CliqueCutset);
    REQUIRE(thp.cutset);
    CHECK(thp.cutset->clique.members() == std::vector<int>{0, 1});

    const auto c6 = check_only_prism_dichotomy(cycle_graph(6));
    CHECK(c6.branch == OnlyPrismBranch::LineGraphRoot);
    REQUIRE(c6.root);
    CHECK(are_isomorphic(c6.root->root, cycle_graph(6)));

    CHECK(code_of([] { check_only_prism_dichotomy(theta(2, 2, 2)); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { check_only_prism_dichotomy(complete_graph(4)); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("chordless dichotomy") {
    CHECK(check_chordless_dichotomy(theta(2, 2, 2)).branch == ChordlessBranch::TwoSparse);
    CHECK(check_chordless_dichotomy(complete_bipartite(2, 6)).branch == ChordlessBranch::TwoSparse);
    CHECK(check_chordless_dichotomy(cycle_graph(8)).branch == ChordlessBranch::TwoSparse);
    CHECK(code_of([] { check_chordless_dichotomy(complete_graph(4)); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { check_chordless_dichotomy(path_graph(4)); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("pipeline trace") {
    const auto steps = decompose_pipeline(theta(2, 2, 2));
    REQUIRE(!steps.empty());
    CHECK(steps.front().step == "two_connected");
    CHECK(steps.back().step == "hamiltonian");
    CHECK(steps.back().result == "false");
    for (const auto& s : steps)
        if (s.certificate) CHECK(s.certificate->tag != CertificateTag::HamCycle);

    const auto broken = decompose_pipeline(path_graph(4));
    REQUIRE(broken.size() == 1);
    CHECK(broken[0].result == "false");
    REQUIRE(broken[0].certificate);
    CHECK(validate(path_graph(4), *broken[0].certificate));

    const auto c6 = decompose_pipeline(cycle_graph(6));
    CHECK(c6.back().result == "true");
}
