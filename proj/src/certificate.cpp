#include "obstructa/certificate.hpp"

#include <algorithm>

namespace obstructa {

std::string_view to_string(CertificateTag tag) {
    switch (tag) {
        case CertificateTag::HamCycle: return "HamCycle";
        case CertificateTag::HamPath: return "HamPath";
        case CertificateTag::CutVertex: return "CutVertex";
        case CertificateTag::Cutset: return "Cutset";
        case CertificateTag::CliqueCutset: return "CliqueCutset";
        case CertificateTag::TwoEdgeCutset: return "TwoEdgeCutset";
        case CertificateTag::Embedding: return "Embedding";
        case CertificateTag::K4Subdivision: return "K4Subdivision";
        case CertificateTag::ProperTwoCutsetSplit: return "ProperTwoCutsetSplit";
    }
    return "Unknown";
}

namespace {

bool in_range(const Graph& g, const std::vector<int>& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](int v) { return v >= 0 && v < g.n(); });
}

// Distinct in-range vertices as a mask, or nullopt.
std::optional<Mask> as_mask(const Graph& g, const std::vector<int>& vs) {
    if (!in_range(g, vs)) return std::nullopt;
    Mask m = 0;
    for (int v : vs) {
        if (m & bit(v)) return std::nullopt;
        m |= bit(v);
    }
    return m;
}

bool disconnects(const Graph& g, Mask removed) {
    return components_within(g, g.vertices() & ~removed).size() >= 2;
}

bool validate_k4_subdivision(const Graph& g, const Certificate& c) {
    if (c.parts.size() != 7 || c.parts[0].size() != 4) return false;
    auto branch = as_mask(g, c.parts[0]);
    if (!branch) return false;
    static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Mask used_internal = 0;
    for (int p = 0; p < 6; ++p) {
        const auto& path = c.parts[p + 1];
        if (path.size() < 2 || !is_path_in(g, path)) return false;
        const int a = c.parts[0][kPairs[p][0]];
        const int b = c.parts[0][kPairs[p][1]];
        if (!((path.front() == a && path.back() == b) || (path.front() == b && path.back() == a))) return false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const Mask m = bit(path[i]);
            if ((m & *branch) || (m & used_internal)) return false;
            used_internal |= m;
        }
    }
    return true;
}

bool validate_split(const Graph& g, const Certificate& c) {
    if (c.parts.size() != 3 || c.parts[0].size() != 2) return false;
    auto pair = as_mask(g, c.parts[0]);
    auto x = as_mask(g, c.parts[1]);
    auto y = as_mask(g, c.parts[2]);
    if (!pair || !x || !y || *x == 0 || *y == 0) return false;
    const int u = c.parts[0][0];
    const int v = c.parts[0][1];
    if (g.adjacent(u, v)) return false;
    if ((*x & *y) || (*x & *pair) || (*y & *pair) || (*x | *y | *pair) != g.vertices()) return false;
    for (int a : c.parts[1])
        if (g.row(a) & *y) return false;
    for (Mask side : {*x, *y}) {
        const Mask with_ends = side | *pair;
        if (!(reach(g, with_ends, u) & bit(v))) return false;
        if (is_path_graph_within(g, with_ends)) return false;
    }
    return true;
}

}  // namespace

bool is_path_in(const Graph& g, const std::vector<int>& walk) {
    if (walk.empty() || !as_mask(g, walk)) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.adjacent(walk[i], walk[i + 1])) return false;
    return true;
}

bool is_hamiltonian_path(const Graph& g, const std::vector<int>& path) {
    return static_cast<int>(path.size()) == g.n() && g.n() > 0 && is_path_in(g, path);
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
    return g.n() >= 3 && is_hamiltonian_path(g, cycle) && g.adjacent(cycle.front(), cycle.back());
}

bool is_path_graph_within(const Graph& g, Mask within) {
    if (within == 0 || !is_connected_within(g, within)) return false;
    int edges = 0;
    bool ok = true;
    for_each_bit(within, [&](int v) {
        const int d = popcount(g.row(v) & within);
        edges += d;
        ok = ok && d <= 2;
    });
    return ok && edges / 2 == popcount(within) - 1;
}

bool validate(const Graph& g, const Certificate& c) {
    switch (c.tag) {
        case CertificateTag::HamCycle:
            return c.parts.size() == 1 && is_hamiltonian_cycle(g, c.parts[0]);
        case CertificateTag::HamPath:
            return c.parts.size() == 1 && is_hamiltonian_path(g, c.parts[0]);
        case CertificateTag::CutVertex: {
            if (c.parts.size() != 1 || c.parts[0].size() != 1) return false;
            auto m = as_mask(g, c.parts[0]);
            return m && is_connected(g) && disconnects(g, *m);
        }
        case CertificateTag::Cutset: {
            if (c.parts.size() != 1) return false;
            auto m = as_mask(g, c.parts[0]);
            if (!m) return false;
            return (*m == 0 && g.n() < 3) || disconnects(g, *m);
        }
        case CertificateTag::CliqueCutset: {
            if (c.parts.size() != 1) return false;
            auto m = as_mask(g, c.parts[0]);
            if (!m) return false;
            for (int v : c.parts[0])
                if ((g.row(v) & *m) != (*m & ~bit(v))) return false;
            return disconnects(g, *m);
        }
        case CertificateTag::TwoEdgeCutset: {
            if (c.parts.size() != 2) return false;
            Graph h = g;
            for (const auto& e : c.parts) {
                if (e.size() != 2 || !in_range(g, e) || e[0] == e[1] || !g.adjacent(e[0], e[1])) return false;
                h.remove_edge(e[0], e[1]);
            }
            return !is_connected(h);
        }
        case CertificateTag::Embedding:
            return c.parts.size() == 1 && as_mask(g, c.parts[0]).has_value();
        case CertificateTag::K4Subdivision:
            return validate_k4_subdivision(g, c);
        case CertificateTag::ProperTwoCutsetSplit:
            return validate_split(g, c);
    }
    return false;
}

}  // namespace obstructa
