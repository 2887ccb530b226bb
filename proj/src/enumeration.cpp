#include "obstructa/enumeration.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "obstructa/canonical.hpp"
#include "obstructa/detectors.hpp"
#include "obstructa/error.hpp"
#include "obstructa/families.hpp"
#include "obstructa/hamiltonicity.hpp"
#include "obstructa/io.hpp"

namespace obstructa {

namespace {

void check_cap(int n) {
    if (n > kMaxEnumerationVertices)
        throw Error(ErrorCode::TooLarge, "enumeration is capped at 10 vertices; n=" + std::to_string(n));
    if (n < 0) throw Error(ErrorCode::InvalidSpec, "negative vertex count");
}

int effective_jobs(int jobs, std::size_t work) {
    const int j = std::max(1, jobs);
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(j), std::max<std::size_t>(1, work)));
}

// Runs body(begin, end, slot) over [0, total) split into contiguous slices.
template <class Body>
void run_sliced(std::size_t total, int jobs, Body&& body) {
    const int workers = effective_jobs(jobs, total);
    if (workers == 1) {
        body(std::size_t{0}, total, 0);
        return;
    }
    std::vector<std::thread> threads;
    const std::size_t step = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(total, step * w);
        const std::size_t end = std::min(total, begin + step);
        threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
    for (auto& t : threads) t.join();
}

void compact(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::uint64_t> augment(const std::vector<std::uint64_t>& parents, int n, int jobs) {
    const int workers = effective_jobs(jobs, parents.size());
    std::vector<std::vector<std::uint64_t>> found(workers);
    constexpr std::size_t kCompactAt = std::size_t{1} << 22;
    run_sliced(parents.size(), workers, [&](std::size_t begin, std::size_t end, int slot) {
        auto& out = found[slot];
        std::size_t last_size = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const Graph parent = unpack_upper_triangle(n - 1, parents[i]);
            Graph child(n);
            for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
            const Mask span = low_mask(n - 1);
            for (Mask nbrs = 0; nbrs <= span; ++nbrs) {
                Graph g = child;
                for_each_bit(nbrs, [&](int v) { g.add_edge(v, n - 1); });
                out.push_back(canonical_code(g));
            }
            if (out.size() - last_size > kCompactAt) {
                compact(out);
                last_size = out.size();
            }
        }
        compact(out);
    });
    std::vector<std::uint64_t> merged;
    for (auto& part : found) {
        merged.insert(merged.end(), part.begin(), part.end());
        part.clear();
        part.shrink_to_fit();
    }
    compact(merged);
    return merged;
}

std::mutex levels_mutex;
std::array<std::vector<std::uint64_t>, kMaxEnumerationVertices + 1> levels;
std::array<bool, kMaxEnumerationVertices + 1> level_ready{};

}  // namespace

const std::vector<std::uint64_t>& graph_codes(int n, int jobs) {
    check_cap(n);
    std::lock_guard lock(levels_mutex);
    if (!level_ready[0]) {
        levels[0] = {0};
        level_ready[0] = true;
    }
    for (int k = 1; k <= n; ++k) {
        if (level_ready[k]) continue;
        levels[k] = augment(levels[k - 1], k, jobs);
        level_ready[k] = true;
    }
    return levels[n];
}

void reset_graph_cache() {
    std::lock_guard lock(levels_mutex);
    for (auto& level : levels) std::vector<std::uint64_t>().swap(level);
    level_ready.fill(false);
}

void for_each_graph(int n, const std::function<bool(const Graph&)>& visit, int jobs) {
    for (std::uint64_t code : graph_codes(n, jobs)) {
        if (visit(unpack_upper_triangle(n, code))) return;
    }
}

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter, int jobs) {
    std::vector<Graph> out;
    for_each_graph(
        n,
        [&](const Graph& g) {
            if (!filter || filter(g)) out.push_back(g);
            return false;
        },
        jobs);
    return out;
}

// ---- census -------------------------------------------------------------------

namespace {

struct Tally {
    CensusRow row;
    std::vector<std::string> violators;
};

void classify_into(const Graph& g, Tally& t) {
    ++t.row.all;
    if (!is_two_connected(g)) return;
    ++t.row.two_connected;
    if (!is_wheel_free(g)) return;
    ++t.row.wheel_free_2conn;

    const bool contains = find_induced_3pc(g).has_value();
    const bool recognized = recognize_3pc(g).has_value();
    const bool hamiltonian = find_hamiltonian_cycle(g).found;
    const bool obstruction = !hamiltonian && is_hc_obstruction(g).is_obstruction;

    if (!contains) {
        ++t.row.three_pc_free_among_those;
        if (hamiltonian) ++t.row.hamiltonian_among_those;
    }
    if (obstruction) ++t.row.hc_obstructions_wheel_free;
    if (recognized) ++t.row.recognized_3pcs;

    const bool violates = (!contains && !hamiltonian) || (obstruction != recognized);
    if (violates) t.violators.push_back(encode_graph6(g));
}

CensusReport run_census(int max_n, int jobs, bool keep_violators) {
    check_cap(max_n);
    CensusReport report;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        const auto& codes = graph_codes(n, jobs);
        const int workers = effective_jobs(jobs, codes.size());
        std::vector<Tally> tallies(workers);
        run_sliced(codes.size(), workers, [&](std::size_t begin, std::size_t end, int slot) {
            for (std::size_t i = begin; i < end; ++i) classify_into(unpack_upper_triangle(n, codes[i]), tallies[slot]);
        });
        CensusRow row;
        row.n = n;
        for (const Tally& t : tallies) {
            row.all += t.row.all;
            row.two_connected += t.row.two_connected;
            row.wheel_free_2conn += t.row.wheel_free_2conn;
            row.three_pc_free_among_those += t.row.three_pc_free_among_those;
            row.hamiltonian_among_those += t.row.hamiltonian_among_those;
            row.hc_obstructions_wheel_free += t.row.hc_obstructions_wheel_free;
            row.recognized_3pcs += t.row.recognized_3pcs;
            if (keep_violators)
                report.counterexamples.insert(report.counterexamples.end(), t.violators.begin(), t.violators.end());
        }
        report.rows.push_back(row);
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    return report;
}

}  // namespace

CensusReport census(int max_n, int jobs) { return run_census(max_n, jobs, false); }

CensusReport verify_main_theorem(int max_n, int jobs) {
    CensusReport report = run_census(max_n, jobs, true);
    for (const CensusRow& row : report.rows) {
        if (row.hc_obstructions_wheel_free != row.recognized_3pcs && report.counterexamples.empty())
            throw Error(ErrorCode::PreconditionViolated,
                        "obstruction and 3PC counts differ at n=" + std::to_string(row.n) + " without a violator");
    }
    return report;
}

// ---- report formats ----------------------------------------------------------------

namespace {

constexpr const char* kColumns[] = {"n",
                                    "all",
                                    "two_connected",
                                    "wheel_free_2conn",
                                    "three_pc_free_among_those",
                                    "hamiltonian_among_those",
                                    "hc_obstructions_wheel_free",
                                    "recognized_3pcs"};

std::array<std::uint64_t, 8> values(const CensusRow& r) {
    return {static_cast<std::uint64_t>(r.n), r.all,
            r.two_connected,               r.wheel_free_2conn,
            r.three_pc_free_among_those,   r.hamiltonian_among_those,
            r.hc_obstructions_wheel_free,  r.recognized_3pcs};
}

}  // namespace

std::string census_to_json(const CensusReport& r) {
    nlohmann::ordered_json j;
    j["max_n"] = r.max_n;
    j["rows"] = nlohmann::ordered_json::array();
    for (const CensusRow& row : r.rows) {
        nlohmann::ordered_json o;
        const auto v = values(row);
        for (std::size_t i = 0; i < v.size(); ++i) o[kColumns[i]] = v[i];
        j["rows"].push_back(std::move(o));
    }
    j["counterexamples"] = r.counterexamples;
    return j.dump(2) + "\n";
}

std::string census_to_csv(const CensusReport& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
    out << "\n";
    for (const CensusRow& row : r.rows) {
        const auto v = values(row);
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << "\n";
    }
    return out.str();
}

std::string census_to_text(const CensusReport& r) {
    std::ostringstream out;
    out << "max_n " << r.max_n << "\n";
    for (const CensusRow& row : r.rows) {
        const auto v = values(row);
        out << "n=" << row.n;
        for (std::size_t i = 1; i < v.size(); ++i) out << " " << kColumns[i] << "=" << v[i];
        out << "\n";
    }
    out << "counterexamples " << r.counterexamples.size() << "\n";
    for (const auto& c : r.counterexamples) out << c << "\n";
    return out.str();
}

}  // namespace obstructa
