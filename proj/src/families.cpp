#include "obstructa/families.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "obstructa/canonical.hpp"
#include "obstructa/error.hpp"

namespace obstructa {

std::string_view to_string(ThreePcKind kind) {
    switch (kind) {
        case ThreePcKind::Prism: return "prism";
        case ThreePcKind::Pyramid: return "pyramid";
        case ThreePcKind::Theta: return "theta";
    }
    return "unknown";
}

std::string_view to_string(ThreePcFamily family) {
    switch (family) {
        case ThreePcFamily::Prism: return "prism";
        case ThreePcFamily::PrismPlus: return "prism+";
        case ThreePcFamily::Pyramid: return "pyramid";
        case ThreePcFamily::PyramidPlus: return "pyramid+";
        case ThreePcFamily::Theta: return "theta";
        case ThreePcFamily::ThetaPlus: return "theta+";
    }
    return "unknown";
}

namespace {

int branch_vertices(ThreePcKind kind) {
    switch (kind) {
        case ThreePcKind::Prism: return 6;
        case ThreePcKind::Pyramid: return 4;
        case ThreePcKind::Theta: return 2;
    }
    return 0;
}

int core_edges(ThreePcKind kind) {
    switch (kind) {
        case ThreePcKind::Prism: return 6;
        case ThreePcKind::Pyramid: return 3;
        case ThreePcKind::Theta: return 0;
    }
    return 0;
}

// Appends a path of the given length from `from` to `to`, allocating internal
// vertices from `next`.
void add_path(Graph& g, int from, int to, int length, int& next) {
    int prev = from;
    for (int step = 1; step < length; ++step) {
        g.add_edge(prev, next);
        prev = next++;
    }
    g.add_edge(prev, to);
}

// Shared by prisms, pyramids, thetas and their short variants; no validation.
Graph assemble(ThreePcKind kind, const std::array<int, 3>& lengths, std::uint8_t chords) {
    int n = branch_vertices(kind);
    for (int l : lengths) n += l - 1;
    if (n > kMaxVertices) throw Error(ErrorCode::CapacityExceeded, "configuration needs " + std::to_string(n) + " vertices");
    Graph g(n);
    int next = branch_vertices(kind);
    std::array<int, 3> start{};
    std::array<int, 3> end{};
    switch (kind) {
        case ThreePcKind::Prism:
            g.add_edge(0, 1), g.add_edge(0, 2), g.add_edge(1, 2);
            g.add_edge(3, 4), g.add_edge(3, 5), g.add_edge(4, 5);
            start = {0, 1, 2};
            end = {3, 4, 5};
            break;
        case ThreePcKind::Pyramid:
            g.add_edge(0, 1), g.add_edge(0, 2), g.add_edge(1, 2);
            start = {0, 1, 2};
            end = {3, 3, 3};
            break;
        case ThreePcKind::Theta:
            start = {0, 0, 0};
            end = {1, 1, 1};
            break;
    }
    for (int i = 0; i < 3; ++i) add_path(g, start[i], end[i], lengths[i], next);
    for (int i = 0; i < 3; ++i)
        if (chords & (1U << i)) g.add_edge(start[i], end[i]);
    return g;
}

}  // namespace

int ThreePcSpec::vertex_count() const {
    int n = branch_vertices(kind);
    for (int l : lengths) n += l - 1;
    return n;
}

int ThreePcSpec::edge_count() const {
    int m = core_edges(kind) + lengths[0] + lengths[1] + lengths[2];
    return m + (kind == ThreePcKind::Theta ? (chords ? 1 : 0) : popcount(chords));
}

ThreePcFamily ThreePcSpec::family() const {
    const bool plus = chords != 0;
    switch (kind) {
        case ThreePcKind::Prism: return plus ? ThreePcFamily::PrismPlus : ThreePcFamily::Prism;
        case ThreePcKind::Pyramid: return plus ? ThreePcFamily::PyramidPlus : ThreePcFamily::Pyramid;
        case ThreePcKind::Theta: return plus ? ThreePcFamily::ThetaPlus : ThreePcFamily::Theta;
    }
    return ThreePcFamily::Theta;
}

ThreePcSpec ThreePcSpec::canonical() const {
    ThreePcSpec out = *this;
    if (kind == ThreePcKind::Theta) {
        std::sort(out.lengths.begin(), out.lengths.end());
        out.chords = chords ? 1 : 0;
        return out;
    }
    std::array<std::pair<int, int>, 3> paths{};
    for (int i = 0; i < 3; ++i) paths[i] = {lengths[i], (chords >> i) & 1};
    std::sort(paths.begin(), paths.end());
    out.chords = 0;
    for (int i = 0; i < 3; ++i) {
        out.lengths[i] = paths[i].first;
        if (paths[i].second) out.chords |= static_cast<std::uint8_t>(1U << i);
    }
    return out;
}

void validate_spec(const ThreePcSpec& spec) {
    if (spec.chords & ~0x7U) throw Error(ErrorCode::InvalidSpec, "chord indices must be 1..3");
    for (int l : spec.lengths)
        if (l < 1) throw Error(ErrorCode::InvalidLengths, "path lengths must be positive");
    for (int l : spec.lengths)
        if (l == 1) throw Error(ErrorCode::ShortVariant, "a path of length one gives a short variant, not a 3PC");
    if (spec.kind == ThreePcKind::Theta && popcount(spec.chords) > 1)
        throw Error(ErrorCode::TooManyThetaChords, "a theta takes at most one edge between a and b");
}

Graph build_3pc(const ThreePcSpec& spec) {
    validate_spec(spec);
    return assemble(spec.kind, spec.lengths, spec.chords);
}

Graph build_short_variant(ShortKind kind, const std::array<int, 3>& lengths) {
    for (int l : lengths)
        if (l < 1) throw Error(ErrorCode::InvalidLengths, "path lengths must be positive");
    const auto ones = std::count(lengths.begin(), lengths.end(), 1);
    if (kind == ShortKind::ShortPrism) {
        if (ones == 0) throw Error(ErrorCode::InvalidLengths, "a short prism needs a path of length one");
        return assemble(ThreePcKind::Prism, lengths, 0);
    }
    if (ones != 1) throw Error(ErrorCode::InvalidLengths, "a short pyramid has exactly one path of length one");
    return assemble(ThreePcKind::Pyramid, lengths, 0);
}

Graph build_wheel(const WheelSpec& spec) {
    if (spec.cycle_len < 3) throw Error(ErrorCode::InvalidSpec, "wheel rim needs at least three vertices");
    if (spec.cycle_len + 1 > kMaxVertices) throw Error(ErrorCode::CapacityExceeded, "wheel too large");
    Mask spokes = 0;
    for (int p : spec.hub_neighbors) {
        if (p < 0 || p >= spec.cycle_len) throw Error(ErrorCode::InvalidSpec, "spoke position out of range");
        spokes |= bit(p);
    }
    if (popcount(spokes) < 3) throw Error(ErrorCode::TooFewSpokes, "a wheel hub needs at least three rim neighbours");
    Graph out(spec.cycle_len + 1);
    for (int v = 0; v < spec.cycle_len; ++v) out.add_edge(v, (v + 1) % spec.cycle_len);
    for_each_bit(spokes, [&](int p) { out.add_edge(spec.cycle_len, p); });
    return out;
}

std::vector<ThreePcSpec> three_pc_specs_with_vertices(int n) {
    std::set<ThreePcSpec> specs;
    for (ThreePcKind kind : {ThreePcKind::Prism, ThreePcKind::Pyramid, ThreePcKind::Theta}) {
        // Sum of (length - 1) over the three paths.
        const int internal = n - branch_vertices(kind);
        for (int a = 1; 3 * a <= internal; ++a) {
            for (int b = a; a + 2 * b <= internal; ++b) {
                const int c = internal - a - b;
                if (c < b) continue;
                const std::array<int, 3> lengths{a + 1, b + 1, c + 1};
                const int masks = kind == ThreePcKind::Theta ? 2 : 8;
                for (int m = 0; m < masks; ++m)
                    specs.insert(ThreePcSpec{kind, lengths, static_cast<std::uint8_t>(m)}.canonical());
            }
        }
    }
    return {specs.begin(), specs.end()};
}

namespace {

constexpr int kSignatureMaxDegree = 7;

// Degree histogram packed 7 bits per degree; nullopt when a degree exceeds 7
// (no 3PC has one).
std::optional<std::uint64_t> degree_signature(const Graph& g, Mask within) {
    std::uint64_t sig = 0;
    bool ok = true;
    for_each_bit(within, [&](int v) {
        const int d = popcount(g.row(v) & within);
        if (d > kSignatureMaxDegree) ok = false;
        else sig += std::uint64_t{1} << (7 * d);
    });
    if (!ok) return std::nullopt;
    return sig;
}

struct RecognitionTable {
    std::unordered_map<std::string, ThreePcSpec> by_form;
    std::unordered_set<std::uint64_t> signatures;
    std::unordered_set<int> edge_counts;
    std::vector<std::pair<ThreePcSpec, ThreePcSpec>> collisions;
};

const RecognitionTable& table_for(int n) {
    static std::array<std::once_flag, kMaxVertices + 1> once;
    static std::array<std::unique_ptr<RecognitionTable>, kMaxVertices + 1> tables;
    std::call_once(once[n], [n] {
        auto t = std::make_unique<RecognitionTable>();
        for (const ThreePcSpec& spec : three_pc_specs_with_vertices(n)) {
            Graph g = build_3pc(spec);
            auto [it, inserted] = t->by_form.emplace(canonical_form(g), spec);
            if (!inserted) t->collisions.emplace_back(it->second, spec);
            if (auto sig = degree_signature(g, g.vertices())) t->signatures.insert(*sig);
            t->edge_counts.insert(spec.edge_count());
        }
        tables[n] = std::move(t);
    });
    return *tables[n];
}

}  // namespace

bool may_be_3pc_within(const Graph& g, Mask within) {
    const RecognitionTable& t = table_for(popcount(within));
    if (t.by_form.empty()) return false;
    auto sig = degree_signature(g, within);
    return sig && t.signatures.contains(*sig);
}

std::optional<ThreePcSpec> recognize_3pc(const Graph& g) {
    const RecognitionTable& t = table_for(g.n());
    if (t.by_form.empty() || !t.edge_counts.contains(g.edge_count())) return std::nullopt;
    auto sig = degree_signature(g, g.vertices());
    if (!sig || !t.signatures.contains(*sig)) return std::nullopt;
    auto it = t.by_form.find(canonical_form(g));
    if (it == t.by_form.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<ThreePcSpec, ThreePcSpec>> recognition_collisions(int n) { return table_for(n).collisions; }

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::ParseError, "family spec '" + std::string(text) + "': " + why);
}

std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
            parse_fail(whole, "expected an integer, got '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) parse_fail(whole, "trailing comma");
    }
    return out;
}

std::array<int, 3> three_lengths(std::string_view text, std::string_view whole) {
    auto values = parse_int_list(text, whole);
    if (values.size() != 3) parse_fail(whole, "expected three path lengths");
    return {values[0], values[1], values[2]};
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) parse_fail(text, "missing ':'");
    std::string_view head = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);

    if (head == "wheel") {
        const auto at = body.find('@');
        if (at == std::string_view::npos) parse_fail(text, "wheel needs 'cycle_len@positions'");
        auto len = parse_int_list(body.substr(0, at), text);
        if (len.size() != 1) parse_fail(text, "bad wheel cycle length");
        return WheelSpec{len[0], parse_int_list(body.substr(at + 1), text)};
    }
    if (head == "shortprism") return ShortVariantSpec{ShortKind::ShortPrism, three_lengths(body, text)};
    if (head == "shortpyramid") return ShortVariantSpec{ShortKind::ShortPyramid, three_lengths(body, text)};

    std::uint8_t chords = 0;
    if (const auto plus = head.find('+'); plus != std::string_view::npos) {
        const std::string_view digits = head.substr(plus + 1);
        if (digits.empty()) parse_fail(text, "'+' must be followed by path indices");
        for (char c : digits) {
            if (c < '1' || c > '3') parse_fail(text, "chord indices must be 1, 2 or 3");
            chords |= static_cast<std::uint8_t>(1U << (c - '1'));
        }
        head = head.substr(0, plus);
    }
    ThreePcSpec spec;
    if (head == "theta") spec.kind = ThreePcKind::Theta;
    else if (head == "pyramid") spec.kind = ThreePcKind::Pyramid;
    else if (head == "prism") spec.kind = ThreePcKind::Prism;
    else parse_fail(text, "unknown family '" + std::string(head) + "'");
    spec.lengths = three_lengths(body, text);
    spec.chords = chords;
    return spec;
}

std::string format_spec(const ThreePcSpec& spec) {
    std::string out(to_string(spec.kind));
    if (spec.chords) {
        out += '+';
        for (int i = 0; i < 3; ++i)
            if (spec.chords & (1U << i)) out += static_cast<char>('1' + i);
    }
    out += ':';
    for (int i = 0; i < 3; ++i) {
        if (i) out += ',';
        out += std::to_string(spec.lengths[i]);
    }
    return out;
}

std::string format_family_spec(const FamilySpec& spec) {
    struct Formatter {
        std::string operator()(const ThreePcSpec& s) const { return format_spec(s); }
        std::string operator()(const ShortVariantSpec& s) const {
            std::string out = s.kind == ShortKind::ShortPrism ? "shortprism:" : "shortpyramid:";
            return out + std::to_string(s.lengths[0]) + "," + std::to_string(s.lengths[1]) + "," +
                   std::to_string(s.lengths[2]);
        }
        std::string operator()(const WheelSpec& s) const {
            std::string out = "wheel:" + std::to_string(s.cycle_len) + "@";
            for (std::size_t i = 0; i < s.hub_neighbors.size(); ++i)
                out += (i ? "," : "") + std::to_string(s.hub_neighbors[i]);
            return out;
        }
    };
    return std::visit(Formatter{}, spec);
}

Graph build_family(const FamilySpec& spec) {
    struct Builder {
        Graph operator()(const ThreePcSpec& s) const { return build_3pc(s); }
        Graph operator()(const ShortVariantSpec& s) const { return build_short_variant(s.kind, s.lengths); }
        Graph operator()(const WheelSpec& s) const { return build_wheel(s); }
    };
    return std::visit(Builder{}, spec);
}

}  // namespace obstructa
