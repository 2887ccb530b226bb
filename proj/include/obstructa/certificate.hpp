#pragma once

#include <string_view>
#include <vector>

#include "obstructa/graph.hpp"

namespace obstructa {

enum class CertificateTag {
    HamCycle,
    HamPath,
    CutVertex,
    Cutset,
    CliqueCutset,
    TwoEdgeCutset,
    Embedding,
    K4Subdivision,
    ProperTwoCutsetSplit,
};

std::string_view to_string(CertificateTag tag);

// Witness payloads, by tag:
//   HamCycle, HamPath      parts[0] = vertex order
//   CutVertex              parts[0] = {v}
//   Cutset                 parts[0] = removed set (empty set certifies a
//                          disconnected graph, or any graph on < 3 vertices)
//   CliqueCutset           parts[0] = clique
//   TwoEdgeCutset          parts[0] = {u1, v1}, parts[1] = {u2, v2}
//   Embedding              parts[0] = vertex subset
//   K4Subdivision          parts[0] = 4 branch vertices, parts[1..6] = paths
//                          for branch pairs 01, 02, 03, 12, 13, 23
//   ProperTwoCutsetSplit   parts[0] = {u, v}, parts[1] = X, parts[2] = Y
struct Certificate {
    CertificateTag tag = CertificateTag::Embedding;
    std::vector<std::vector<int>> parts;
};

bool is_path_in(const Graph& g, const std::vector<int>& walk);
bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);
bool is_hamiltonian_path(const Graph& g, const std::vector<int>& path);
// True iff the induced subgraph on `within` is a path graph (one vertex counts).
bool is_path_graph_within(const Graph& g, Mask within);

// Structural re-check of a witness against the graph it was issued for.
bool validate(const Graph& g, const Certificate& c);

}  // namespace obstructa
