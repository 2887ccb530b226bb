#include "obstructa/decomposition.hpp"

#include <algorithm>
#include <queue>

#include "obstructa/canonical.hpp"
#include "obstructa/detectors.hpp"
#include "obstructa/error.hpp"
#include "obstructa/hamiltonicity.hpp"
#include "obstructa/io.hpp"

namespace obstructa {

std::string_view to_string(OnlyPrismBranch b) {
    switch (b) {
        case OnlyPrismBranch::None: return "None";
        case OnlyPrismBranch::LineGraphRoot: return "LineGraphRoot";
        case OnlyPrismBranch::CliqueCutset: return "CliqueCutset";
    }
    return "Unknown";
}

std::string_view to_string(ChordlessBranch b) {
    switch (b) {
        case ChordlessBranch::None: return "None";
        case ChordlessBranch::TwoSparse: return "TwoSparse";
        case ChordlessBranch::ProperTwoCutset: return "ProperTwoCutset";
    }
    return "Unknown";
}

namespace {

void require_two_connected(const Graph& g, const char* op) {
    if (!is_two_connected(g)) throw Error(ErrorCode::NotTwoConnected, std::string(op) + " needs a 2-connected graph");
}

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw Error(ErrorCode::NotConnected, std::string(op) + " needs a connected graph");
}

// Up to `want` internally vertex-disjoint s-t paths, by unit-capacity
// augmenting paths on the vertex-split digraph.
std::vector<std::vector<int>> disjoint_paths(const Graph& g, int s, int t, int want) {
    const int n = g.n();
    const int nodes = 2 * n;
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (int v = 0; v < n; ++v) cap[in(v)][out(v)] = (v == s || v == t) ? want : 1;
    for (const Edge& e : g.edges()) {
        cap[out(e.u)][in(e.v)] = 1;
        cap[out(e.v)][in(e.u)] = 1;
    }
    const auto original = cap;
    int flow = 0;
    while (flow < want) {
        std::vector<int> parent(nodes, -1);
        parent[out(s)] = out(s);
        std::queue<int> q;
        q.push(out(s));
        while (!q.empty() && parent[in(t)] < 0) {
            const int a = q.front();
            q.pop();
            for (int b = 0; b < nodes; ++b) {
                if (cap[a][b] > 0 && parent[b] < 0) {
                    parent[b] = a;
                    q.push(b);
                }
            }
        }
        if (parent[in(t)] < 0) break;
        for (int b = in(t); b != out(s); b = parent[b]) {
            --cap[parent[b]][b];
            ++cap[b][parent[b]];
        }
        ++flow;
    }
    std::vector<std::vector<int>> paths;
    for (int k = 0; k < flow; ++k) {
        std::vector<int> path{s};
        int v = s;
        while (v != t) {
            int next = -1;
            for (int w = 0; w < n && next < 0; ++w) {
                if (original[out(v)][in(w)] == 1 && cap[out(v)][in(w)] == 0) next = w;
            }
            // Consume the unit so the next path takes a different route.
            cap[out(v)][in(next)] = 1;
            path.push_back(next);
            v = next;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace

// ---- degree-2 contraction -------------------------------------------------

Degree2Reduction reduce_adjacent_degree2(const Graph& g) {
    require_two_connected(g, "reduce_adjacent_degree2");
    Degree2Reduction r{g, {}};
    while (r.graph.n() > 3) {
        std::optional<Edge> target;
        for (const Edge& e : r.graph.edges()) {
            if (r.graph.degree(e.u) == 2 && r.graph.degree(e.v) == 2) {
                target = e;
                break;
            }
        }
        if (!target) break;
        r.log.push_back(*target);
        r.graph = contract_edge(r.graph, *target);
    }
    return r;
}

// ---- special edges ----------------------------------------------------------

std::vector<SpecialEdge> find_special_edges(const Graph& g) {
    require_two_connected(g, "find_special_edges");
    std::vector<SpecialEdge> out;
    for (const Edge& e : g.edges()) {
        const Mask pair = bit(e.u) | bit(e.v);
        const auto comps = components_within(g, g.vertices() & ~pair);
        if (comps.size() < 2) continue;
        for (Mask c : comps) {
            if (popcount(c) == 1 && g.row(lowest(c)) == pair) out.push_back({e, lowest(c)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpecialEdgeReduction reduce_special_edges(const Graph& g) {
    const auto specials = find_special_edges(g);
    for (std::size_t i = 1; i < specials.size(); ++i) {
        if (specials[i].edge == specials[i - 1].edge)
            throw Error(ErrorCode::AmbiguousMidpoints, "special edge {" + std::to_string(specials[i].edge.u) + "," +
                                                           std::to_string(specials[i].edge.v) +
                                                           "} has several midpoints");
    }
    Mask removed = 0;
    for (const SpecialEdge& s : specials) removed |= bit(s.midpoint);
    auto sub = induced_subgraph(g, VertexSet(g.vertices() & ~removed));
    return {std::move(sub.graph), VertexSet(removed), std::move(sub.new_to_old)};
}

// ---- chordless / 2-sparse / cutsets ----------------------------------------

ChordlessResult is_chordless(const Graph& h) {
    ChordlessResult r;
    for (const Edge& e : h.edges()) {
        Graph without = h;
        without.remove_edge(e.u, e.v);
        if (!(reach(without, without.vertices(), e.u) & bit(e.v))) continue;
        auto paths = disjoint_paths(without, e.u, e.v, 2);
        if (paths.size() < 2) continue;
        r.chordless = false;
        r.chord = e;
        r.cycle = paths[0];
        // Back along the second path, skipping both ends already present.
        for (auto it = paths[1].rbegin() + 1; it + 1 != paths[1].rend(); ++it) r.cycle.push_back(*it);
        return r;
    }
    return r;
}

TwoSparseResult is_two_sparse(const Graph& h) {
    for (const Edge& e : h.edges()) {
        if (h.degree(e.u) > 2 && h.degree(e.v) > 2) return {false, e};
    }
    return {};
}

Certificate ProperTwoCutsetSplit::certificate() const {
    return Certificate{CertificateTag::ProperTwoCutsetSplit, {{u, v}, x.members(), y.members()}};
}

std::optional<ProperTwoCutsetSplit> find_proper_2_cutset(const Graph& h) {
    require_connected(h, "find_proper_2_cutset");
    for (int u = 0; u < h.n(); ++u) {
        for (int v = u + 1; v < h.n(); ++v) {
            if (h.adjacent(u, v)) continue;
            const Mask pair = bit(u) | bit(v);
            const auto comps = components_within(h, h.vertices() & ~pair);
            if (comps.size() < 2 || comps.size() > 30) continue;
            // comps[0] holds the least vertex and always goes to X.
            const unsigned others = static_cast<unsigned>(comps.size() - 1);
            for (unsigned choose = 0; choose + 1 < (1U << others); ++choose) {
                Mask x = comps[0];
                Mask y = 0;
                for (unsigned i = 0; i < others; ++i) ((choose >> i) & 1U ? x : y) |= comps[i + 1];
                ProperTwoCutsetSplit split{u, v, VertexSet(x), VertexSet(y)};
                if (validate(h, split.certificate())) return split;
            }
        }
    }
    return std::nullopt;
}

std::vector<TwoEdgeCutset> find_two_edge_cutsets(const Graph& h) {
    require_connected(h, "find_two_edge_cutsets");
    const auto edges = h.edges();
    std::vector<TwoEdgeCutset> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            Graph cut = h;
            cut.remove_edge(edges[i].u, edges[i].v);
            cut.remove_edge(edges[j].u, edges[j].v);
            const auto comps = components_within(cut, cut.vertices());
            if (comps.size() < 2) continue;
            TwoEdgeCutset c{edges[i], edges[j], static_cast<int>(comps.size()), false};
            for (Mask m : comps) {
                const int size = popcount(m);
                if (size == 1 || (size == 2 && cut.adjacent(lowest(m), 63 - std::countl_zero(m)))) c.trivial_side = true;
            }
            out.push_back(c);
        }
    }
    return out;
}

// ---- line graphs ---------------------------------------------------------------

namespace {

class KrauszSearch {
public:
    explicit KrauszSearch(const Graph& g) : g_(g) {
        for (int v = 0; v < g.n(); ++v) uncovered_[v] = g.row(v);
    }

    // Calls visit(cliques) for each complete partition; stops when it returns true.
    template <class Visit>
    bool run(Visit&& visit) {
        int u = -1;
        for (int x = 0; x < g_.n() && u < 0; ++x)
            if (uncovered_[x] != 0) u = x;
        if (u < 0) return visit(cliques_);
        const int v = lowest(uncovered_[u]);
        if (parts_[u] >= 2 || parts_[v] >= 2) return false;

        Mask open = 0;
        for (int x = 0; x < g_.n(); ++x)
            if (parts_[x] < 2) open |= bit(x);
        const Mask extra = uncovered_[u] & uncovered_[v] & open;
        std::vector<Mask> options;
        collect(extra, bit(u) | bit(v), options);
        std::stable_sort(options.begin(), options.end(),
                         [](Mask a, Mask b) { return popcount(a) > popcount(b); });

        for (Mask clique : options) {
            apply(clique, +1);
            if (consistent(clique) && run(visit)) return true;
            apply(clique, -1);
        }
        return false;
    }

private:
    // All cliques of uncovered edges containing `base`, extended from `pool`,
    // in lexicographic order of their extension.
    void collect(Mask pool, Mask base, std::vector<Mask>& out) const {
        out.push_back(base);
        while (pool != 0) {
            const int w = lowest(pool);
            pool &= pool - 1;
            collect(pool & uncovered_[w], base | bit(w), out);
        }
    }

    void apply(Mask clique, int sign) {
        for_each_bit(clique, [&](int x) {
            parts_[x] += sign;
            if (sign > 0) uncovered_[x] &= ~clique;
            else uncovered_[x] |= clique & ~bit(x);
        });
        if (sign > 0) cliques_.push_back(clique);
        else cliques_.pop_back();
    }

    // A vertex in two cliques is finished; a vertex in one clique must send
    // its remaining edges into a single further clique.
    bool consistent(Mask clique) const {
        bool ok = true;
        for_each_bit(clique, [&](int x) {
            const Mask rest = uncovered_[x];
            if (parts_[x] >= 2 && rest != 0) ok = false;
            for_each_bit(rest, [&](int y) {
                if ((uncovered_[y] & rest) != (rest & ~bit(y))) ok = false;
            });
        });
        return ok;
    }

    const Graph& g_;
    std::array<Mask, kMaxVertices> uncovered_{};
    std::array<int, kMaxVertices> parts_{};
    std::vector<Mask> cliques_;
};

RootGraphResult root_from_cliques(const Graph& g, const std::vector<Mask>& cliques) {
    int count = static_cast<int>(cliques.size());
    std::vector<std::vector<int>> membership(g.n());
    for (int c = 0; c < static_cast<int>(cliques.size()); ++c)
        for_each_bit(cliques[c], [&](int x) { membership[x].push_back(c); });
    for (int x = 0; x < g.n(); ++x) count += 2 - static_cast<int>(membership[x].size());
    if (count > kMaxVertices) throw Error(ErrorCode::CapacityExceeded, "line graph root exceeds 64 vertices");
    RootGraphResult r{Graph(count), std::vector<Edge>(g.n())};
    int next = static_cast<int>(cliques.size());
    for (int x = 0; x < g.n(); ++x) {
        auto& m = membership[x];
        while (m.size() < 2) m.push_back(next++);
        r.edge_of_vertex[x] = Edge{m[0], m[1]}.normalized();
        r.root.add_edge(m[0], m[1]);
    }
    return r;
}

}  // namespace

std::optional<RootGraphResult> recognize_line_graph(const Graph& g) {
    require_connected(g, "recognize_line_graph");
    std::optional<RootGraphResult> out;
    KrauszSearch(g).run([&](const std::vector<Mask>& cliques) {
        out = root_from_cliques(g, cliques);
        return true;
    });
    return out;
}

std::vector<Graph> all_line_graph_roots(const Graph& g, std::size_t limit) {
    require_connected(g, "all_line_graph_roots");
    std::vector<Graph> roots;
    KrauszSearch(g).run([&](const std::vector<Mask>& cliques) {
        roots.push_back(root_from_cliques(g, cliques).root);
        return roots.size() >= limit;
    });
    return roots;
}

bool is_triangle_free(const Graph& g) {
    for (const Edge& e : g.edges())
        if (g.row(e.u) & g.row(e.v)) return false;
    return true;
}

// ---- K4 minors ------------------------------------------------------------------

bool has_k4_minor(const Graph& h) {
    std::array<Mask, kMaxVertices> rows{};
    for (int v = 0; v < h.n(); ++v) rows[v] = h.row(v);
    Mask alive = h.vertices();
    bool changed = true;
    while (changed && alive != 0) {
        changed = false;
        for_each_bit(alive, [&](int v) {
            const Mask nbrs = rows[v] & alive;
            const int d = popcount(nbrs);
            if (d > 2) return;
            alive &= ~bit(v);
            changed = true;
            if (d == 2) {
                const int x = lowest(nbrs);
                const int y = lowest(nbrs & (nbrs - 1));
                rows[x] |= bit(y);
                rows[y] |= bit(x);
            }
        });
    }
    return alive != 0;
}

namespace {

class SubdivisionSearch {
public:
    explicit SubdivisionSearch(const Graph& h) : h_(h) {}

    std::optional<Certificate> run() {
        Mask candidates = 0;
        for (int v = 0; v < h_.n(); ++v)
            if (h_.degree(v) >= 3) candidates |= bit(v);
        std::optional<Certificate> found;
        for_each_k_subset(candidates, 4, [&](Mask branch) {
            branch_ = VertexSet(branch).members();
            paths_.clear();
            if (!route(0, branch)) return false;
            Certificate c{CertificateTag::K4Subdivision, {branch_}};
            for (auto& p : paths_) c.parts.push_back(p);
            found = std::move(c);
            return true;
        });
        return found;
    }

private:
    static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

    bool route(int pair, Mask blocked) {
        if (pair == 6) return true;
        const int a = branch_[kPairs[pair][0]];
        const int b = branch_[kPairs[pair][1]];
        std::vector<int> path{a};
        return walk(pair, a, b, blocked, bit(a), path);
    }

    bool walk(int pair, int at, int target, Mask blocked, Mask on_path, std::vector<int>& path) {
        if (h_.adjacent(at, target)) {
            path.push_back(target);
            paths_.push_back(path);
            Mask internal = on_path & ~bit(path.front());
            if (route(pair + 1, blocked | internal)) return true;
            paths_.pop_back();
            path.pop_back();
        }
        Mask next = h_.row(at) & ~blocked & ~on_path;
        while (next != 0) {
            const int w = lowest(next);
            next &= next - 1;
            path.push_back(w);
            if (walk(pair, w, target, blocked, on_path | bit(w), path)) return true;
            path.pop_back();
        }
        return false;
    }

    const Graph& h_;
    std::vector<int> branch_;
    std::vector<std::vector<int>> paths_;
};

}  // namespace

std::optional<Certificate> k4_subdivision_witness(const Graph& h) {
    if (!has_k4_minor(h)) return std::nullopt;
    return SubdivisionSearch(h).run();
}

// ---- imported structure theorems ---------------------------------------------

OnlyPrismDichotomy check_only_prism_dichotomy(const Graph& g) {
    if (!is_only_prism(g))
        throw Error(ErrorCode::PreconditionViolated, "input contains a theta, a wheel or a pyramid");
    OnlyPrismDichotomy d;
    if (g.n() == 0) {
        d.holds = true;
        d.branch = OnlyPrismBranch::LineGraphRoot;
        d.root = RootGraphResult{Graph(0), {}};
        return d;
    }
    if (!is_connected(g)) {
        d.holds = true;
        d.branch = OnlyPrismBranch::CliqueCutset;
        CliqueCutset empty;
        for (Mask c : components_within(g, g.vertices())) empty.components.emplace_back(c);
        d.cutset = std::move(empty);
        return d;
    }
    if (auto root = recognize_line_graph(g); root && is_triangle_free(root->root) && is_chordless(root->root).chordless) {
        d.holds = true;
        d.branch = OnlyPrismBranch::LineGraphRoot;
        d.root = std::move(root);
        return d;
    }
    if (auto cut = find_clique_cutset(g)) {
        d.holds = true;
        d.branch = OnlyPrismBranch::CliqueCutset;
        d.cutset = std::move(cut);
    }
    return d;
}

ChordlessDichotomy check_chordless_dichotomy(const Graph& h) {
    if (!is_two_connected(h) || !is_chordless(h).chordless)
        throw Error(ErrorCode::PreconditionViolated, "input must be 2-connected and chordless");
    ChordlessDichotomy d;
    if (is_two_sparse(h).two_sparse) {
        d.holds = true;
        d.branch = ChordlessBranch::TwoSparse;
        return d;
    }
    if (auto split = find_proper_2_cutset(h)) {
        d.holds = true;
        d.branch = ChordlessBranch::ProperTwoCutset;
        d.split = split;
    }
    return d;
}

// ---- pipeline trace -------------------------------------------------------------

std::vector<PipelineStep> decompose_pipeline(const Graph& g) {
    std::vector<PipelineStep> steps;
    auto add = [&](std::string name, int n, std::string result, std::optional<Certificate> cert = std::nullopt) {
        steps.push_back({std::move(name), n, std::move(result), std::move(cert)});
    };

    const ConnectivityReport conn = connectivity_report(g);
    if (!conn.two_connected) {
        std::optional<Certificate> cert;
        if (conn.connected && !conn.cut_vertices.empty())
            cert = Certificate{CertificateTag::CutVertex, {{*conn.cut_vertices.begin()}}};
        else
            cert = Certificate{CertificateTag::Cutset, {{}}};
        add("two_connected", g.n(), "false", cert);
        return steps;
    }
    add("two_connected", g.n(), "true");

    const Degree2Reduction reduced = reduce_adjacent_degree2(g);
    add("reduce_adjacent_degree2", g.n(), std::to_string(reduced.log.size()) + " contractions");
    const Graph& core = reduced.graph;

    const auto specials = find_special_edges(core);
    std::string listed;
    for (const SpecialEdge& s : specials)
        listed += (listed.empty() ? "" : " ") + std::to_string(s.edge.u) + "-" + std::to_string(s.edge.v) + "/" +
                  std::to_string(s.midpoint);
    add("special_edges", core.n(), listed.empty() ? "none" : listed);

    std::optional<SpecialEdgeReduction> prime;
    try {
        prime = reduce_special_edges(core);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::AmbiguousMidpoints) throw;
        add("reduce_special_edges", core.n(), "ambiguous midpoints");
    }
    if (prime) {
        add("reduce_special_edges", core.n(), std::to_string(prime->removed.size()) + " midpoints removed");
        const Graph& gp = prime->graph;
        if (is_connected(gp)) {
            auto cut = find_clique_cutset(gp);
            if (cut)
                add("clique_cutset", gp.n(), "found", Certificate{CertificateTag::CliqueCutset, {cut->clique.members()}});
            else
                add("clique_cutset", gp.n(), "none");
            if (auto root = recognize_line_graph(gp)) {
                const Graph& h = root->root;
                add("line_graph_root", gp.n(), h.n() <= 62 ? encode_graph6(h) : "root too large for graph6");
                const ChordlessResult chordless = is_chordless(h);
                std::optional<Certificate> chord_cert;
                if (!chordless.chordless) chord_cert = Certificate{CertificateTag::Embedding, {chordless.cycle}};
                add("root_chordless", h.n(), chordless.chordless ? "true" : "false", chord_cert);
                const TwoSparseResult sparse = is_two_sparse(h);
                add("root_two_sparse", h.n(), sparse.two_sparse ? "true" : "false");
                if (is_connected(h)) {
                    auto split = find_proper_2_cutset(h);
                    add("root_proper_2_cutset", h.n(), split ? "found" : "none",
                        split ? std::optional<Certificate>(split->certificate()) : std::nullopt);
                }
                auto k4 = k4_subdivision_witness(h);
                add("root_k4_minor", h.n(), k4 ? "true" : "false", k4);
            } else {
                add("line_graph_root", gp.n(), "none");
            }
        }
    }

    if (g.n() <= kMaxObstructionVertices) {
        const HamResult ham = find_hamiltonian_cycle(g);
        add("hamiltonian", g.n(), ham.found ? "true" : "false",
            ham.found ? std::optional<Certificate>(Certificate{CertificateTag::HamCycle, {ham.sequence}})
                      : std::nullopt);
    }
    return steps;
}

}  // namespace obstructa
