#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace obstructa {

inline constexpr int kMaxVertices = 64;

// Raw vertex bitmask: bit v set iff vertex v is a member.
using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }

template <class F>
constexpr void for_each_bit(Mask m, F&& f) {
    while (m != 0) {
        f(lowest(m));
        m &= m - 1;
    }
}

class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(Mask rest) : rest_(rest) {}
        constexpr int operator*() const { return lowest(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> members) {
        for (int v : members) bits_ |= bit(v);
    }
    static VertexSet from(std::span<const int> members);

    constexpr Mask bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= bit(v); }
    constexpr void erase(int v) { bits_ &= ~bit(v); }
    constexpr int size() const { return popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    std::vector<int> members() const;

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

private:
    Mask bits_ = 0;
};

// Unordered pair, stored with u < v once normalized.
struct Edge {
    int u = 0;
    int v = 0;

    constexpr Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
    constexpr bool operator==(const Edge&) const = default;
    constexpr auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1 with one adjacency word per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    Mask vertices() const { return low_mask(n_); }
    Mask row(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return popcount(adj_[v]); }
    int edge_count() const;
    int max_degree() const;
    // Lexicographic order on (u, v), u < v.
    std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

Graph graph_from_edges(int n, std::span<const Edge> edges);
inline Graph graph_from_edges(int n, std::initializer_list<Edge> edges) {
    return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Commonly used small graphs.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside the subset
    std::vector<int> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet subset);

struct ConnectivityReport {
    bool connected = false;
    std::vector<VertexSet> components;  // ordered by least member
    VertexSet cut_vertices;
    bool two_connected = false;
};

ConnectivityReport connectivity_report(const Graph& g);

struct CliqueCutset {
    VertexSet clique;
    std::vector<VertexSet> components;
};

// Smallest clique (then lexicographically least) whose removal disconnects g.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g);

struct LineGraph {
    Graph graph;
    std::vector<Edge> edge_of_vertex;  // vertex i of the line graph is this edge
};

LineGraph line_graph(const Graph& g);

// Merges the endpoints into the smaller label; the last vertex moves into the
// freed label so labels stay dense.
Graph contract_edge(const Graph& g, Edge e);

// Mask-level primitives over the subgraph induced by `within`.
Mask reach(const Graph& g, Mask within, int start);
bool is_connected_within(const Graph& g, Mask within);
std::vector<Mask> components_within(const Graph& g, Mask within);
bool is_two_connected_within(const Graph& g, Mask within);
int min_degree_within(const Graph& g, Mask within);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

// Visits the k-element subsets of `universe` in lexicographic order of their
// sorted member lists. Returns true as soon as visit returns true.
template <class Visit>
bool for_each_k_subset(Mask universe, int k, Visit&& visit, Mask chosen = 0) {
    if (k == 0) return visit(chosen);
    if (popcount(universe) < k) return false;
    while (popcount(universe) >= k) {
        const int v = lowest(universe);
        universe &= universe - 1;
        if (for_each_k_subset(universe, k - 1, visit, chosen | bit(v))) return true;
    }
    return false;
}

}  // namespace obstructa
