#include "obstructa/graph.hpp"

#include <algorithm>
#include <string>

#include "obstructa/error.hpp"

namespace obstructa {

VertexSet VertexSet::from(std::span<const int> members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each_bit(bits_, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorCode::CapacityExceeded, "vertex count " + std::to_string(n) + " outside 0..64");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for_each_bit(adj_[u] & ~low_mask(u + 1), [&](int v) { out.push_back({u, v}); });
    return out;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet subset) {
    if ((subset.bits() & ~g.vertices()) != 0)
        throw Error(ErrorCode::VertexOutOfRange, "subset exceeds vertex range");
    InducedSubgraph out;
    out.old_to_new.assign(g.n(), -1);
    out.new_to_old = subset.members();
    for (int i = 0; i < static_cast<int>(out.new_to_old.size()); ++i) out.old_to_new[out.new_to_old[i]] = i;
    out.graph = Graph(subset.size());
    for (int i = 0; i < subset.size(); ++i) {
        for_each_bit(g.row(out.new_to_old[i]) & subset.bits(), [&](int w) {
            int j = out.old_to_new[w];
            if (i < j) out.graph.add_edge(i, j);
        });
    }
    return out;
}

Mask reach(const Graph& g, Mask within, int start) {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier != 0) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.row(v); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected_within(const Graph& g, Mask within) {
    if (within == 0) return false;
    return reach(g, within, lowest(within)) == within;
}

std::vector<Mask> components_within(const Graph& g, Mask within) {
    std::vector<Mask> out;
    while (within != 0) {
        Mask c = reach(g, within, lowest(within));
        out.push_back(c);
        within &= ~c;
    }
    return out;
}

int min_degree_within(const Graph& g, Mask within) {
    int best = kMaxVertices;
    for_each_bit(within, [&](int v) { best = std::min(best, popcount(g.row(v) & within)); });
    return within == 0 ? 0 : best;
}

bool is_two_connected_within(const Graph& g, Mask within) {
    if (popcount(within) < 3 || !is_connected_within(g, within)) return false;
    Mask rest = within;
    while (rest != 0) {
        int v = lowest(rest);
        rest &= rest - 1;
        if (!is_connected_within(g, within & ~bit(v))) return false;
    }
    return true;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }
bool is_two_connected(const Graph& g) { return is_two_connected_within(g, g.vertices()); }

namespace {

// Depth-first lowpoint computation for articulation points.
struct CutVertexSearch {
    const Graph& g;
    std::vector<int> disc, low;
    Mask cut = 0;
    int timer = 0;

    explicit CutVertexSearch(const Graph& graph) : g(graph), disc(graph.n(), -1), low(graph.n(), 0) {}

    void visit(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for_each_bit(g.row(v), [&](int w) {
            if (disc[w] < 0) {
                ++children;
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent >= 0 && low[w] >= disc[v]) cut |= bit(v);
            } else if (w != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        });
        if (parent < 0 && children > 1) cut |= bit(v);
    }
};

}  // namespace

ConnectivityReport connectivity_report(const Graph& g) {
    ConnectivityReport r;
    for (Mask c : components_within(g, g.vertices())) r.components.emplace_back(c);
    r.connected = r.components.size() == 1;
    CutVertexSearch search(g);
    for (int v = 0; v < g.n(); ++v)
        if (search.disc[v] < 0) search.visit(v, -1);
    r.cut_vertices = VertexSet(search.cut);
    r.two_connected = g.n() >= 3 && r.connected && r.cut_vertices.empty();
    return r;
}

namespace {

// Cliques of exactly `size` vertices in lexicographic order; stops when visit returns true.
template <class Visit>
bool for_each_clique(const Graph& g, int size, Mask chosen, Mask candidates, Visit&& visit) {
    if (popcount(chosen) == size) return visit(chosen);
    while (candidates != 0) {
        int v = lowest(candidates);
        candidates &= candidates - 1;
        if (for_each_clique(g, size, chosen | bit(v), candidates & g.row(v), visit)) return true;
    }
    return false;
}

}  // namespace

std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "clique cutset search needs a connected graph");
    std::optional<CliqueCutset> found;
    const Mask all = g.vertices();
    for (int size = 1; size <= g.n() - 2 && !found; ++size) {
        for_each_clique(g, size, 0, all, [&](Mask clique) {
            auto comps = components_within(g, all & ~clique);
            if (comps.size() < 2) return false;
            CliqueCutset cc{VertexSet(clique), {}};
            for (Mask c : comps) cc.components.emplace_back(c);
            found = std::move(cc);
            return true;
        });
    }
    return found;
}

LineGraph line_graph(const Graph& g) {
    LineGraph out;
    out.edge_of_vertex = g.edges();
    const int m = static_cast<int>(out.edge_of_vertex.size());
    if (m > kMaxVertices)
        throw Error(ErrorCode::CapacityExceeded, "line graph would have " + std::to_string(m) + " vertices");
    out.graph = Graph(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = out.edge_of_vertex[i];
            const Edge& b = out.edge_of_vertex[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) out.graph.add_edge(i, j);
        }
    }
    return out;
}

Graph contract_edge(const Graph& g, Edge e) {
    if (e.u < 0 || e.v < 0 || e.u >= g.n() || e.v >= g.n() || e.u == e.v || !g.adjacent(e.u, e.v))
        throw Error(ErrorCode::EdgeAbsent, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
    const Edge k = e.normalized();
    const int last = g.n() - 1;
    // Old label -> new label: v disappears, last fills v's slot.
    std::vector<int> relabel(g.n());
    for (int x = 0; x < g.n(); ++x) relabel[x] = x;
    relabel[k.v] = k.u;
    if (k.v != last) relabel[last] = k.v;

    Graph out(g.n() - 1);
    for (const Edge& f : g.edges()) {
        int a = relabel[f.u];
        int b = relabel[f.v];
        if (a != b) out.add_edge(a, b);
    }
    return out;
}

}  // namespace obstructa
