#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "obstructa/graph.hpp"

namespace obstructa {

inline constexpr int kMaxEnumerationVertices = 10;

using GraphFilter = std::function<bool(const Graph&)>;

// Packed canonical codes (see pack_upper_triangle) of every isomorphism class
// on n vertices, ascending. Built by canonical augmentation of the level below
// and cached for the life of the process. Throws TooLarge for n > 10.
const std::vector<std::uint64_t>& graph_codes(int n, int jobs = 1);

// Drops every cached level; references returned earlier become invalid.
void reset_graph_cache();

// Streams one representative per class in code order; stops early when
// visit returns true.
void for_each_graph(int n, const std::function<bool(const Graph&)>& visit, int jobs = 1);

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter = {}, int jobs = 1);

struct CensusRow {
    int n = 0;
    std::uint64_t all = 0;
    std::uint64_t two_connected = 0;
    std::uint64_t wheel_free_2conn = 0;
    std::uint64_t three_pc_free_among_those = 0;
    std::uint64_t hamiltonian_among_those = 0;
    std::uint64_t hc_obstructions_wheel_free = 0;
    std::uint64_t recognized_3pcs = 0;  // wheel-free 2-connected graphs recognized as 3PCs

    bool operator==(const CensusRow&) const = default;
};

struct CensusReport {
    int max_n = 0;
    std::vector<CensusRow> rows;
    // graph6 of every violator: a 2-connected wheel-free 3PC-free
    // non-Hamiltonian graph, a wheel-free HC-obstruction that is not a 3PC,
    // or a wheel-free 3PC that is not an HC-obstruction.
    std::vector<std::string> counterexamples;

    bool operator==(const CensusReport&) const = default;
};

// Count table only; counterexamples stay empty. Throws TooLarge for max_n > 10.
CensusReport census(int max_n, int jobs = 1);

// Same table plus the violators of either direction of the characterization.
// Throws TooLarge for max_n > 10.
CensusReport verify_main_theorem(int max_n, int jobs = 1);

std::string census_to_json(const CensusReport& r);
std::string census_to_csv(const CensusReport& r);
std::string census_to_text(const CensusReport& r);

}  // namespace obstructa
