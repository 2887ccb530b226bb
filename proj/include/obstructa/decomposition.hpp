#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "obstructa/certificate.hpp"
#include "obstructa/graph.hpp"

namespace obstructa {

// ---- degree-2 contraction -------------------------------------------------

struct Degree2Reduction {
    Graph graph;
    std::vector<Edge> log;  // contracted edges, in the labels current at each step
};

// Contracts the least edge whose ends both have degree 2 until none is left
// or a triangle remains. Requires a 2-connected graph; the result is one too.
Degree2Reduction reduce_adjacent_degree2(const Graph& g);

// ---- special edges ----------------------------------------------------------

// Edge {u,v} that is a 2-cutset with a single-vertex side w, N(w) = {u,v}.
struct SpecialEdge {
    Edge edge;
    int midpoint = -1;
    auto operator<=>(const SpecialEdge&) const = default;
};

std::vector<SpecialEdge> find_special_edges(const Graph& g);

struct SpecialEdgeReduction {
    Graph graph;                 // g minus every midpoint
    VertexSet removed;           // midpoints, in g's labels
    std::vector<int> new_to_old;
};

// Throws AmbiguousMidpoints when one special edge carries several midpoints.
SpecialEdgeReduction reduce_special_edges(const Graph& g);

// ---- chordless / 2-sparse / cutsets ----------------------------------------

struct ChordlessResult {
    bool chordless = true;
    std::optional<Edge> chord;
    std::vector<int> cycle;  // a cycle through both ends of `chord`, avoiding it
};

// Per edge uv: uv chords some cycle iff u and v are joined by two internally
// disjoint paths in H - uv.
ChordlessResult is_chordless(const Graph& h);

struct TwoSparseResult {
    bool two_sparse = true;
    std::optional<Edge> violating_edge;
};

TwoSparseResult is_two_sparse(const Graph& h);

struct ProperTwoCutsetSplit {
    int u = -1;
    int v = -1;
    VertexSet x;
    VertexSet y;

    Certificate certificate() const;
};

// Pairs u < v in lexicographic order; X always holds the least vertex outside
// {u, v}. Requires a connected graph.
std::optional<ProperTwoCutsetSplit> find_proper_2_cutset(const Graph& h);

struct TwoEdgeCutset {
    Edge first;
    Edge second;
    int components = 0;
    bool trivial_side = false;  // some component is a single vertex or a single edge
};

// Every pair of edges whose removal disconnects a connected graph.
std::vector<TwoEdgeCutset> find_two_edge_cutsets(const Graph& h);

// ---- line graphs ---------------------------------------------------------------

struct RootGraphResult {
    Graph root;
    std::vector<Edge> edge_of_vertex;  // vertex i of G corresponds to this edge of the root
};

// Krausz partition search: clique edge-partition with every vertex in at most
// two cliques. Larger cliques are tried first, so K3 gets the star K_{1,3}.
std::optional<RootGraphResult> recognize_line_graph(const Graph& g);

// Roots of every Krausz partition (at most `limit` of them).
std::vector<Graph> all_line_graph_roots(const Graph& g, std::size_t limit = 1000);

bool is_triangle_free(const Graph& g);

// ---- K4 minors ------------------------------------------------------------------

// Series-parallel reduction: drop vertices of degree <= 1, suppress degree-2
// vertices (parallel edges collapse). K4-minor-free iff nothing survives.
bool has_k4_minor(const Graph& h);

// Four branch vertices and six internally disjoint paths, by backtracking.
std::optional<Certificate> k4_subdivision_witness(const Graph& h);

// ---- imported structure theorems ---------------------------------------------

enum class OnlyPrismBranch { None, LineGraphRoot, CliqueCutset };

struct OnlyPrismDichotomy {
    bool holds = false;
    OnlyPrismBranch branch = OnlyPrismBranch::None;
    std::optional<RootGraphResult> root;
    std::optional<CliqueCutset> cutset;
};

// Line graph of a triangle-free chordless graph, or a clique cutset (tested
// in that order). Throws PreconditionViolated unless g is theta-, wheel- and
// pyramid-free.
OnlyPrismDichotomy check_only_prism_dichotomy(const Graph& g);

enum class ChordlessBranch { None, TwoSparse, ProperTwoCutset };

struct ChordlessDichotomy {
    bool holds = false;
    ChordlessBranch branch = ChordlessBranch::None;
    std::optional<ProperTwoCutsetSplit> split;
};

// 2-sparse, or a proper 2-cutset (tested in that order). Throws
// PreconditionViolated unless h is 2-connected and chordless.
ChordlessDichotomy check_chordless_dichotomy(const Graph& h);

std::string_view to_string(OnlyPrismBranch b);
std::string_view to_string(ChordlessBranch b);

// ---- pipeline trace -------------------------------------------------------------

struct PipelineStep {
    std::string step;
    int input_n = 0;
    std::string result;
    std::optional<Certificate> certificate;
};

// Runs the structural reductions in proof order on g and records each one:
// 2-connectivity, degree-2 contraction, special-edge removal, clique cutset,
// line-graph root and the root's chordless / 2-sparse / 2-cutset / K4-minor
// structure, then Hamiltonicity of g.
std::vector<PipelineStep> decompose_pipeline(const Graph& g);

}  // namespace obstructa
