#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obstructa/graph.hpp"

namespace obstructa {

// Canonical labeling by equitable partition refinement and individualization.
// Every leaf of the search tree yields a relabeled adjacency matrix; the
// lexicographically least one (rows compared as words) is the representative.
// Subtrees are skipped when an already-discovered automorphism fixing the
// current prefix maps an explored child onto them.
struct CanonicalLabeling {
    std::vector<int> label;  // vertex -> canonical label
    Graph graph;             // g relabeled by `label`
};

CanonicalLabeling canonical_labeling(const Graph& g);

// graph6 bytes of the canonical representative (long size prefix when n > 62).
std::string canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// Relabels g so that vertex v becomes perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);

// Upper triangle packed into one word, bit j*(j-1)/2 + i for i < j.
// Defined for n <= 11; the enumeration keys on it.
inline constexpr int kMaxPackedVertices = 11;
std::uint64_t pack_upper_triangle(const Graph& g);
Graph unpack_upper_triangle(int n, std::uint64_t code);
std::uint64_t canonical_code(const Graph& g);

}  // namespace obstructa
