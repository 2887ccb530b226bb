#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "obstructa/graph.hpp"

// Brute-force reference implementations. None of these call the library's
// search code; they only read adjacency.
namespace oracle {

using obstructa::Graph;
using obstructa::Mask;

// Tries every cyclic order with vertex 0 fixed.
bool hamiltonian_cycle(const Graph& g);

// Every 5-colouring (colour 4 = unused) with four nonempty, connected,
// pairwise touching classes; colours appear in first-use order.
bool k4_minor(const Graph& g);

// Every vertex subset S inducing a cycle, with a hub outside S having at
// least three neighbours in S.
bool has_wheel(const Graph& g);

enum class Kind { Prism, Pyramid, Theta };

// Sorted (length, chorded) pairs plus the kind.
struct Shape {
    Kind kind;
    std::array<std::pair<int, bool>, 3> paths;
    bool operator==(const Shape&) const = default;
};

// Structural test: pick the end structures (single vertex or triangle on
// each side), delete them and require exactly three induced path components
// wired to the ends as the definitions demand. Returns every shape that fits.
std::vector<Shape> three_pc_shapes(const Graph& g);
bool is_three_pc(const Graph& g);

// Any induced subgraph (all vertex subsets) that is a 3PC.
bool contains_three_pc(const Graph& g);

// Labeled graphs on n vertices with the minimum code over all vertex
// permutations as the class key; returns the number of classes.
std::size_t count_classes_by_permutation(int n);

// Minimum of the packed upper triangle over all vertex permutations.
std::uint64_t permutation_min_code(const Graph& g);

Graph random_graph(int n, double p, std::mt19937_64& rng);

bool is_cycle_within(const Graph& g, Mask s);
bool connected_within(const Graph& g, Mask s);

}  // namespace oracle
