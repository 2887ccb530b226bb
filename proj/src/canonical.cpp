#include "obstructa/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "obstructa/error.hpp"
#include "obstructa/io.hpp"

namespace obstructa {

namespace {

using Rows = std::array<Mask, kMaxVertices>;
using Perm = std::array<std::uint8_t, kMaxVertices>;

struct Partition {
    std::array<Mask, kMaxVertices> cells{};
    int count = 0;
};

// Worst case pushes: initial cells plus at most two per created cell.
constexpr int kQueueCapacity = 4 * kMaxVertices;

// Splits cells until every cell has a uniform neighbor count into every
// splitter. Fragments are ordered by ascending count, which keeps the
// procedure label-invariant.
void refine(const Graph& g, Partition& p, std::array<Mask, kQueueCapacity>& queue, int tail) {
    int head = 0;
    std::array<int, kMaxVertices> counts{};
    std::array<Mask, kMaxVertices + 1> buckets{};
    while (head < tail) {
        const Mask splitter = queue[head++];
        for (int c = 0; c < p.count; ++c) {
            const Mask cell = p.cells[c];
            if ((cell & (cell - 1)) == 0) continue;
            int lo = kMaxVertices + 1;
            int hi = -1;
            int k = 0;
            for_each_bit(cell, [&](int v) {
                int cnt = popcount(g.row(v) & splitter);
                counts[k++] = cnt;
                lo = std::min(lo, cnt);
                hi = std::max(hi, cnt);
            });
            if (lo == hi) continue;
            for (int b = lo; b <= hi; ++b) buckets[b] = 0;
            k = 0;
            for_each_bit(cell, [&](int v) { buckets[counts[k++]] |= bit(v); });
            int fragments = 0;
            std::array<Mask, kMaxVertices> pieces{};
            for (int b = lo; b <= hi; ++b)
                if (buckets[b] != 0) pieces[fragments++] = buckets[b];
            // Open fragments-1 slots after c.
            for (int i = p.count - 1; i > c; --i) p.cells[i + fragments - 1] = p.cells[i];
            for (int f = 0; f < fragments; ++f) {
                p.cells[c + f] = pieces[f];
                queue[tail++] = pieces[f];
            }
            p.count += fragments - 1;
            c += fragments - 1;
        }
    }
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.n()) {}

    CanonicalLabeling run() {
        CanonicalLabeling out;
        out.label.assign(n_, 0);
        out.graph = Graph(n_);
        if (n_ == 0) return out;
        Partition root;
        root.count = 1;
        root.cells[0] = g_.vertices();
        std::array<Mask, kQueueCapacity> queue{};
        queue[0] = root.cells[0];
        refine(g_, root, queue, 1);
        descend(root, 0);
        for (int v = 0; v < n_; ++v) out.label[v] = best_label_[v];
        for (int u = 0; u < n_; ++u)
            for_each_bit(best_[u] & ~low_mask(u + 1), [&](int w) { out.graph.add_edge(u, w); });
        return out;
    }

private:
    static constexpr std::size_t kMaxStoredAutomorphisms = 128;

    void descend(const Partition& p, int depth) {
        int target = -1;
        for (int c = 0; c < p.count; ++c) {
            if ((p.cells[c] & (p.cells[c] - 1)) != 0) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            leaf(p);
            return;
        }
        const Mask cell = p.cells[target];
        Mask explored = 0;
        std::size_t autos_used = static_cast<std::size_t>(-1);
        std::array<int, kMaxVertices> root{};
        for_each_bit(cell, [&](int v) {
            if (explored != 0) {
                if (autos_used != automorphisms_.size()) {
                    orbits_fixing(depth, root);
                    autos_used = automorphisms_.size();
                }
                bool equivalent = false;
                for_each_bit(explored, [&](int w) { equivalent = equivalent || root[w] == root[v]; });
                if (equivalent) return;
            }
            prefix_[depth] = v;
            Partition child = p;
            for (int i = child.count - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
            child.cells[target] = bit(v);
            child.cells[target + 1] = cell & ~bit(v);
            ++child.count;
            std::array<Mask, kQueueCapacity> queue{};
            queue[0] = bit(v);
            refine(g_, child, queue, 1);
            descend(child, depth + 1);
            explored |= bit(v);
        });
    }

    // Union-find roots of the group generated by stored automorphisms that fix
    // prefix_[0..depth) pointwise.
    void orbits_fixing(int depth, std::array<int, kMaxVertices>& root) const {
        for (int v = 0; v < n_; ++v) root[v] = v;
        auto find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (const Perm& a : automorphisms_) {
            bool fixes = true;
            for (int d = 0; d < depth && fixes; ++d) fixes = a[prefix_[d]] == prefix_[d];
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int x = find(v);
                int y = find(a[v]);
                if (x != y) root[std::max(x, y)] = std::min(x, y);
            }
        }
        for (int v = 0; v < n_; ++v) root[v] = find(v);
    }

    void leaf(const Partition& p) {
        Perm label{};
        for (int i = 0; i < n_; ++i) label[lowest(p.cells[i])] = static_cast<std::uint8_t>(i);
        Rows cert{};
        for (int i = 0; i < n_; ++i) {
            Mask row = 0;
            for_each_bit(g_.row(lowest(p.cells[i])), [&](int w) { row |= bit(label[w]); });
            cert[i] = row;
        }
        if (!have_leaf_) {
            have_leaf_ = true;
            first_ = best_ = cert;
            first_label_ = best_label_ = label;
            return;
        }
        if (same(cert, first_)) {
            record_automorphism(first_label_, label);
            return;
        }
        const int cmp = compare(cert, best_);
        if (cmp == 0) {
            record_automorphism(best_label_, label);
        } else if (cmp < 0) {
            best_ = cert;
            best_label_ = label;
        }
    }

    // Two labelings producing the same matrix differ by an automorphism:
    // v -> the vertex carrying v's label under `reference`.
    void record_automorphism(const Perm& reference, const Perm& label) {
        if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
        Perm inverse{};
        for (int v = 0; v < n_; ++v) inverse[reference[v]] = static_cast<std::uint8_t>(v);
        Perm a{};
        for (int v = 0; v < n_; ++v) a[v] = inverse[label[v]];
        automorphisms_.push_back(a);
    }

    bool same(const Rows& a, const Rows& b) const {
        return std::memcmp(a.data(), b.data(), sizeof(Mask) * n_) == 0;
    }

    int compare(const Rows& a, const Rows& b) const {
        for (int i = 0; i < n_; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    const Graph& g_;
    int n_;
    bool have_leaf_ = false;
    Rows first_{}, best_{};
    Perm first_label_{}, best_label_{};
    std::array<int, kMaxVertices> prefix_{};
    std::vector<Perm> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

std::string canonical_form(const Graph& g) { return encode_graph6_any(canonical_labeling(g).graph); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_labeling(a).graph == canonical_labeling(b).graph;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n());
    for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

std::uint64_t pack_upper_triangle(const Graph& g) {
    if (g.n() > kMaxPackedVertices)
        throw Error(ErrorCode::CapacityExceeded, "packed codes hold at most 11 vertices");
    std::uint64_t code = 0;
    for (int j = 1; j < g.n(); ++j) {
        const int base = j * (j - 1) / 2;
        for_each_bit(g.row(j) & low_mask(j), [&](int i) { code |= std::uint64_t{1} << (base + i); });
    }
    return code;
}

Graph unpack_upper_triangle(int n, std::uint64_t code) {
    Graph g(n);
    for (int j = 1; j < n; ++j) {
        const int base = j * (j - 1) / 2;
        for (int i = 0; i < j; ++i)
            if ((code >> (base + i)) & 1U) g.add_edge(i, j);
    }
    return g;
}

std::uint64_t canonical_code(const Graph& g) { return pack_upper_triangle(canonical_labeling(g).graph); }

}  // namespace obstructa
