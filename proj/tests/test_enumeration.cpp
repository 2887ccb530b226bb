#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "json.hpp"

#include "obstructa/canonical.hpp"
#include "obstructa/enumeration.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace obstructa;

TEST_CASE("small enumerations") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(4).size() == 11);

    const auto two_conn = enumerate_graphs(4, [](const Graph& g) { return is_two_connected(g); });
    REQUIRE(two_conn.size() == 3);
    std::set<std::string> forms;
    for (const Graph& g : two_conn) forms.insert(canonical_form(g));
    const Graph diamond = graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(forms == std::set<std::string>{canonical_form(cycle_graph(4)), canonical_form(diamond),
                                         canonical_form(complete_graph(4))});

    CHECK(code_of([] { enumerate_graphs(11); }) == ErrorCode::TooLarge);
    CHECK(code_of([] { census(11); }) == ErrorCode::TooLarge);
    CHECK(code_of([] { verify_main_theorem(12); }) == ErrorCode::TooLarge);
}

TEST_CASE("class counts match permutation-keyed labeled enumeration") {
    for (int n = 1; n <= 6; ++n) CHECK(graph_codes(n).size() == oracle::count_classes_by_permutation(n));
}

TEST_CASE("class count at 7 matches labeled enumeration deduplicated by canonical form") {
    std::set<std::uint64_t> keys;
    for (std::uint64_t code = 0; code < (1ULL << 21); ++code) keys.insert(canonical_code(unpack_upper_triangle(7, code)));
    CHECK(keys.size() == graph_codes(7).size());
    CHECK(std::vector<std::uint64_t>(keys.begin(), keys.end()) == graph_codes(7));
}

TEST_CASE("representatives are pairwise non-isomorphic and in code order") {
    for (int n = 1; n <= 7; ++n) {
        const auto& codes = graph_codes(n);
        CHECK(std::is_sorted(codes.begin(), codes.end()));
        std::set<std::string> forms;
        for (auto c : codes) forms.insert(canonical_form(unpack_upper_triangle(n, c)));
        CHECK(forms.size() == codes.size());
    }
}

TEST_CASE("census counts") {
    const auto c4 = census(4);
    REQUIRE(c4.rows.size() == 4);
    std::vector<std::uint64_t> all;
    for (const auto& r : c4.rows) all.push_back(r.all);
    CHECK(all == std::vector<std::uint64_t>{1, 2, 4, 11});

    const auto c5 = census(5);
    std::vector<std::uint64_t> two;
    for (const auto& r : c5.rows) two.push_back(r.two_connected);
    CHECK(two == std::vector<std::uint64_t>{0, 0, 1, 3, 10});

    for (const auto& r : census(3).rows) CHECK(r.hc_obstructions_wheel_free == 0);
}

TEST_CASE("main theorem at small scale") {
    const auto r = verify_main_theorem(8);
    CHECK(r.counterexamples.empty());
    CHECK(r.rows[4].hc_obstructions_wheel_free == 2);
    CHECK(r.rows[5].hc_obstructions_wheel_free == 2);
    for (const auto& row : r.rows) {
        CHECK(row.hc_obstructions_wheel_free == row.recognized_3pcs);
        CHECK(row.hamiltonian_among_those == row.three_pc_free_among_those);
    }
}

TEST_CASE("reports are deterministic and serializable") {
    const auto a = verify_main_theorem(7);
    const auto b = verify_main_theorem(7, 3);
    CHECK(a == b);
    CHECK(census_to_json(a) == census_to_json(b));

    const auto j = nlohmann::json::parse(census_to_json(a));
    CHECK(j["max_n"] == 7);
    CHECK(j["rows"].size() == 7);
    CHECK(j["rows"][4]["n"] == 5);
    CHECK(j["rows"][4]["hc_obstructions_wheel_free"] == 2);
    CHECK(j["counterexamples"].is_array());

    std::istringstream csv(census_to_csv(census(5)));
    std::string header;
    std::string line;
    std::getline(csv, header);
    CHECK(header.rfind("n,all,two_connected", 0) == 0);
    std::string last;
    while (std::getline(csv, line)) last = line;
    CHECK(last == "5,34,10,5,3,3,2,2");
    CHECK(census_to_text(census(2)).rfind("max_n 2\n", 0) == 0);
}
