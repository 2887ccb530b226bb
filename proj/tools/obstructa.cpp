// obstructa command-line tool.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "obstructa/canonical.hpp"
#include "obstructa/decomposition.hpp"
#include "obstructa/enumeration.hpp"
#include "obstructa/error.hpp"
#include "obstructa/families.hpp"
#include "obstructa/hamiltonicity.hpp"
#include "obstructa/io.hpp"
#include "obstructa/serialize.hpp"

using namespace obstructa;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kParse = 2, kTooLarge = 3, kInvalidSpec = 4 };

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::TooLarge:
        case ErrorCode::CapacityExceeded: return kTooLarge;
        case ErrorCode::ShortVariant:
        case ErrorCode::TooManyThetaChords:
        case ErrorCode::TooFewSpokes:
        case ErrorCode::InvalidLengths: return kInvalidSpec;
        default: return kParse;
    }
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Family spec when the token has a ':', otherwise graph6.
Graph graph_from_token(const std::string& token) {
    if (token.find(':') != std::string::npos) return build_family(parse_family_spec(token));
    return decode_graph6(token);
}

// --input FILE holds an edge list; a positional token is graph6 or spec text.
Graph read_graph(const std::string& token, const std::string& input) {
    if (!input.empty()) return parse_edge_list(read_file(input));
    return graph_from_token(trim(token));
}

std::string report_text(const CensusReport& r, const std::string& format) {
    if (format == "csv") return census_to_csv(r);
    if (format == "text") return census_to_text(r);
    return census_to_json(r);
}

struct Globals {
    std::string format = "json";
    int jobs = 1;
    std::string input;
};

int cmd_check_stream(std::istream& in) {
    int worst = kOk;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        try {
            std::cout << to_json(classify(graph_from_token(line))).dump() << '\n';
        } catch (const Error& e) {
            Json j;
            j["input"] = line;
            j["error"] = std::string(to_string(e.code()));
            std::cout << j.dump() << '\n';
            worst = std::max(worst, exit_code(e.code()));
        }
    }
    return worst;
}

int cmd_ham(const Graph& g, bool path) {
    const HamResult r = path ? find_hamiltonian_path(g) : find_hamiltonian_cycle(g);
    Json j;
    j["kind"] = path ? "path" : "cycle";
    j["found"] = r.found;
    j["sequence"] = r.found ? Json(r.sequence) : Json(nullptr);
    std::cout << j.dump() << '\n';
    return kOk;
}

int cmd_iso(const Graph& a, const Graph& b) {
    Json j;
    j["isomorphic"] = are_isomorphic(a, b);
    j["canonical_a"] = canonical_form(a);
    j["canonical_b"] = canonical_form(b);
    std::cout << j.dump() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HC-obstruction toolkit for wheel-free graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals opt;
    app.add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "enumeration worker threads")
        ->envname("OBSTRUCTA_JOBS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--input", opt.input, "edge-list file (\"n\" then \"u v\" per line)");

    std::string graph;
    std::string other;
    bool path = false;
    int max_n = 8;

    auto* check = app.add_subcommand("check", "classify a graph; reads graph6 lines from stdin when none is given");
    check->add_option("graph", graph, "graph6 or family spec");
    auto* gen = app.add_subcommand("gen", "print the graph6 of a family spec");
    gen->add_option("spec", graph, "e.g. theta:2,2,2, prism+13:2,3,2, wheel:6@0,2,4")->required();
    auto* ham = app.add_subcommand("ham", "find a Hamiltonian cycle (or path)");
    ham->add_option("graph", graph, "graph6 or family spec");
    ham->add_flag("--path", path, "search for a Hamiltonian path instead");
    auto* decompose = app.add_subcommand("decompose", "trace the structural reductions as JSON");
    decompose->add_option("graph", graph, "graph6 or family spec");
    auto* verify = app.add_subcommand("verify", "check every graph up to --max-n; exit 1 on a counterexample");
    verify->add_option("--max-n", max_n, "largest vertex count (at most 10)")->capture_default_str();
    auto* census_cmd = app.add_subcommand("census", "count graph classes up to --max-n");
    census_cmd->add_option("--max-n", max_n, "largest vertex count (at most 10)")->capture_default_str();
    auto* iso = app.add_subcommand("iso", "test two graphs for isomorphism");
    iso->add_option("a", graph, "graph6 or family spec")->required();
    iso->add_option("b", other, "graph6 or family spec")->required();

    for (auto* sub : {ham, decompose})
        sub->callback([&opt, &graph, sub] {
            if (graph.empty() && opt.input.empty())
                throw CLI::ValidationError(sub->get_name(), "a graph or --input FILE is required");
        });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        if (*check) {
            if (graph.empty() && opt.input.empty()) return cmd_check_stream(std::cin);
            std::cout << to_json(classify(read_graph(graph, opt.input))).dump() << '\n';
            return kOk;
        }
        if (*gen) {
            std::cout << encode_graph6(build_family(parse_family_spec(trim(graph)))) << '\n';
            return kOk;
        }
        if (*ham) return cmd_ham(read_graph(graph, opt.input), path);
        if (*decompose) {
            std::cout << to_json(decompose_pipeline(read_graph(graph, opt.input))).dump(2) << '\n';
            return kOk;
        }
        if (*verify) {
            const CensusReport r = verify_main_theorem(max_n, opt.jobs);
            std::cout << report_text(r, opt.format);
            return r.counterexamples.empty() ? kOk : kCounterexample;
        }
        if (*census_cmd) {
            std::cout << report_text(census(max_n, opt.jobs), opt.format);
            return kOk;
        }
        if (*iso) return cmd_iso(graph_from_token(trim(graph)), graph_from_token(trim(other)));
    } catch (const Error& e) {
        std::cerr << "obstructa: " << e.what() << '\n';
        return exit_code(e.code());
    }
    return kOk;
}
