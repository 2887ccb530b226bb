#include "obstructa/hamiltonicity.hpp"

#include <algorithm>

#include "obstructa/error.hpp"

namespace obstructa {

std::string_view to_string(ObstructionFailure f) {
    switch (f) {
        case ObstructionFailure::None: return "None";
        case ObstructionFailure::NotTwoConnected: return "NotTwoConnected";
        case ObstructionFailure::Hamiltonian: return "Hamiltonian";
        case ObstructionFailure::NonMinimal: return "NonMinimal";
    }
    return "Unknown";
}

namespace {

class CycleSearch {
public:
    CycleSearch(const Graph& g, Mask within, bool record) : g_(g), within_(within), record_(record) {}

    bool run() {
        const int n = popcount(within_);
        if (n < 3 || min_degree_within(g_, within_) < 2 || !is_connected_within(g_, within_)) return false;
        start_ = lowest(within_);
        if (record_) path_.push_back(start_);
        return extend(start_, within_ & ~bit(start_));
    }

    std::vector<int> cycle() const { return path_; }

private:
    bool extend(int head, Mask unvisited) {
        if (unvisited == 0) return g_.adjacent(head, start_);
        const Mask ends = bit(head) | bit(start_);
        bool dead = false;
        for_each_bit(unvisited, [&](int w) { dead = dead || popcount(g_.row(w) & (unvisited | ends)) < 2; });
        if (dead) return false;
        // Every unvisited vertex must still be reachable from the head.
        if ((reach(g_, unvisited | bit(head), head) & unvisited) != unvisited) return false;
        Mask next = g_.row(head) & unvisited;
        while (next != 0) {
            const int v = lowest(next);
            next &= next - 1;
            if (record_) path_.push_back(v);
            if (extend(v, unvisited & ~bit(v))) return true;
            if (record_) path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    Mask within_;
    bool record_;
    int start_ = 0;
    std::vector<int> path_;
};

class PathSearch {
public:
    explicit PathSearch(const Graph& g) : g_(g) {}

    bool run() {
        const Mask all = g_.vertices();
        if (all == 0 || !is_connected(g_)) return false;
        for (int s = 0; s < g_.n(); ++s) {
            path_.assign(1, s);
            if (extend(s, all & ~bit(s))) return true;
        }
        path_.clear();
        return false;
    }

    std::vector<int> path() const { return path_; }

private:
    bool extend(int head, Mask unvisited) {
        if (unvisited == 0) return true;
        const Mask avail_base = unvisited | bit(head);
        int forced_ends = 0;
        bool dead = false;
        for_each_bit(unvisited, [&](int w) {
            const int d = popcount(g_.row(w) & avail_base);
            if (d == 0) dead = true;
            if (d == 1) ++forced_ends;
        });
        // A vertex with a single usable neighbour can only be the final vertex.
        if (dead || forced_ends > 1) return false;
        if ((reach(g_, avail_base, head) & unvisited) != unvisited) return false;
        Mask next = g_.row(head) & unvisited;
        while (next != 0) {
            const int v = lowest(next);
            next &= next - 1;
            path_.push_back(v);
            if (extend(v, unvisited & ~bit(v))) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> path_;
};

}  // namespace

bool has_hamiltonian_cycle_within(const Graph& g, Mask within) { return CycleSearch(g, within, false).run(); }

HamResult find_hamiltonian_cycle(const Graph& g) {
    CycleSearch search(g, g.vertices(), true);
    HamResult r;
    if (!search.run()) return r;
    r.found = true;
    r.sequence = search.cycle();
    if (r.sequence[1] > r.sequence.back()) std::reverse(r.sequence.begin() + 1, r.sequence.end());
    return r;
}

HamResult find_hamiltonian_path(const Graph& g) {
    PathSearch search(g);
    HamResult r;
    r.found = search.run();
    if (r.found) r.sequence = search.path();
    return r;
}

ObstructionVerdict is_hc_obstruction(const Graph& g) {
    if (g.n() > kMaxObstructionVertices)
        throw Error(ErrorCode::TooLarge, "obstruction check enumerates subsets; n=" + std::to_string(g.n()) + " > 16");
    ObstructionVerdict verdict;
    const ConnectivityReport conn = connectivity_report(g);
    if (!conn.two_connected) {
        verdict.failure_reason = ObstructionFailure::NotTwoConnected;
        if (!conn.cut_vertices.empty() && conn.connected)
            verdict.witness = Certificate{CertificateTag::CutVertex, {{*conn.cut_vertices.begin()}}};
        else
            verdict.witness = Certificate{CertificateTag::Cutset, {{}}};
        return verdict;
    }
    if (HamResult ham = find_hamiltonian_cycle(g); ham.found) {
        verdict.failure_reason = ObstructionFailure::Hamiltonian;
        verdict.witness = Certificate{CertificateTag::HamCycle, {ham.sequence}};
        return verdict;
    }
    const Mask all = g.vertices();
    for (int k = g.n() - 1; k >= 3; --k) {
        Mask offender = 0;
        const bool hit = for_each_k_subset(all, k, [&](Mask s) {
            if (min_degree_within(g, s) < 2 || !is_two_connected_within(g, s)) return false;
            if (has_hamiltonian_cycle_within(g, s)) return false;
            offender = s;
            return true;
        });
        if (hit) {
            verdict.failure_reason = ObstructionFailure::NonMinimal;
            verdict.witness = Certificate{CertificateTag::Embedding, {VertexSet(offender).members()}};
            return verdict;
        }
    }
    verdict.is_obstruction = true;
    return verdict;
}

bool validate_verdict(const Graph& g, const ObstructionVerdict& v) {
    if (v.is_obstruction) return v.failure_reason == ObstructionFailure::None && !v.witness;
    if (!v.witness || !validate(g, *v.witness)) return false;
    switch (v.failure_reason) {
        case ObstructionFailure::NotTwoConnected:
            return v.witness->tag == CertificateTag::CutVertex || v.witness->tag == CertificateTag::Cutset;
        case ObstructionFailure::Hamiltonian:
            return v.witness->tag == CertificateTag::HamCycle;
        case ObstructionFailure::NonMinimal: {
            if (v.witness->tag != CertificateTag::Embedding) return false;
            const Mask s = VertexSet::from(v.witness->parts[0]).bits();
            return s != g.vertices() && is_two_connected_within(g, s) && !has_hamiltonian_cycle_within(g, s);
        }
        case ObstructionFailure::None:
            return false;
    }
    return false;
}

}  // namespace obstructa
