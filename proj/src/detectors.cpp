#include "obstructa/detectors.hpp"

#include "obstructa/error.hpp"
#include "obstructa/hamiltonicity.hpp"

namespace obstructa {

namespace {

// Induced cycles of g[allowed] whose least vertex is `anchor`, each reported
// once (second vertex smaller than the last). Extension never adds a vertex
// adjacent to an interior path vertex, so every closed cycle is chordless.
class InducedCycleSearch {
public:
    InducedCycleSearch(const Graph& g, Mask allowed, Mask targets) : g_(g), allowed_(allowed), targets_(targets) {}

    std::optional<std::vector<int>> first_with_targets(int anchor) {
        anchor_ = anchor;
        path_.assign(1, anchor);
        const Mask above = allowed_ & ~low_mask(anchor + 1);
        if (extend(above, bit(anchor), 0)) return path_;
        return std::nullopt;
    }

private:
    bool extend(Mask above, Mask on_path, Mask interior_nbrs) {
        const int tail = path_.back();
        const int k = static_cast<int>(path_.size()) - 1;
        Mask cand = g_.row(tail) & above & ~on_path & ~interior_nbrs;
        while (cand != 0) {
            const int x = lowest(cand);
            cand &= cand - 1;
            if (k >= 1 && g_.adjacent(x, anchor_)) {
                if (path_[1] < x && popcount((on_path | bit(x)) & targets_) >= 3) {
                    path_.push_back(x);
                    return true;
                }
                continue;
            }
            const Mask grown = k >= 1 ? interior_nbrs | g_.row(tail) : interior_nbrs;
            path_.push_back(x);
            if (extend(above, on_path | bit(x), grown)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    Mask allowed_;
    Mask targets_;
    int anchor_ = 0;
    std::vector<int> path_;
};

}  // namespace

std::optional<WheelWitness> find_induced_wheel(const Graph& g) {
    for (int hub = 0; hub < g.n(); ++hub) {
        const Mask nbrs = g.row(hub);
        if (popcount(nbrs) < 3) continue;
        const Mask rest = g.vertices() & ~bit(hub);
        InducedCycleSearch search(g, rest, nbrs);
        for (int anchor = 0; anchor < g.n(); ++anchor) {
            if (anchor == hub) continue;
            // Fewer than three hub neighbours at or above the anchor: no rim left.
            if (popcount(nbrs & ~low_mask(anchor)) < 3) break;
            if (auto rim = search.first_with_targets(anchor)) return WheelWitness{hub, std::move(*rim)};
        }
    }
    return std::nullopt;
}

bool is_wheel_free(const Graph& g) { return !find_induced_wheel(g).has_value(); }

std::optional<ThreePcWitness> find_induced_3pc(const Graph& g, FamilyFilter families) {
    if (g.n() > kMaxDetectionVertices)
        throw Error(ErrorCode::TooLarge, "3PC detection enumerates subsets; n=" + std::to_string(g.n()) + " > 20");
    const Mask all = g.vertices();
    std::optional<ThreePcWitness> found;
    for (int k = 5; k <= g.n() && !found; ++k) {
        for_each_k_subset(all, k, [&](Mask s) {
            if (min_degree_within(g, s) < 2 || !may_be_3pc_within(g, s) || !is_connected_within(g, s)) return false;
            auto spec = recognize_3pc(induced_subgraph(g, VertexSet(s)).graph);
            if (!spec || !(families & family_bit(spec->family()))) return false;
            found = ThreePcWitness{*spec, VertexSet(s)};
            return true;
        });
    }
    return found;
}

bool is_only_prism(const Graph& g) {
    constexpr FamilyFilter theta_or_pyramid = family_bit(ThreePcFamily::Theta) | family_bit(ThreePcFamily::Pyramid);
    return is_wheel_free(g) && !find_induced_3pc(g, theta_or_pyramid);
}

ClassificationRecord classify(const Graph& g) {
    if (g.n() > kMaxClassifyVertices)
        throw Error(ErrorCode::TooLarge, "classification is capped at 16 vertices; n=" + std::to_string(g.n()));
    ClassificationRecord r;
    r.two_connected = connectivity_report(g).two_connected;
    r.wheel_free = is_wheel_free(g);
    r.contains_3pc = find_induced_3pc(g).has_value();
    r.hamiltonian = find_hamiltonian_cycle(g).found;
    r.hc_obstruction = is_hc_obstruction(g).is_obstruction;
    r.recognized_3pc = recognize_3pc(g);
    return r;
}

}  // namespace obstructa
