#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "obstructa/graph.hpp"

namespace obstructa {

enum class ThreePcKind : std::uint8_t { Prism, Pyramid, Theta };

// The six named families; "Plus" variants carry at least one chord.
enum class ThreePcFamily : std::uint8_t { Prism, PrismPlus, Pyramid, PyramidPlus, Theta, ThetaPlus };

std::string_view to_string(ThreePcKind kind);
std::string_view to_string(ThreePcFamily family);

// Parameters of a 3-path-configuration.
//
// Prism: triangles {k1,k2,k3} and {l1,l2,l3} joined by disjoint paths Pi from
// ki to li. Pyramid: triangle {k1,k2,k3} and apex l joined by paths Pi from
// ki to l. Theta: paths Pi between a and b. Every path has length >= 2. Bit i
// of `chords` adds the edge joining the two ends of path i+1; a theta takes at
// most one such edge (all of them would be the same edge ab).
struct ThreePcSpec {
    ThreePcKind kind = ThreePcKind::Theta;
    std::array<int, 3> lengths{2, 2, 2};
    std::uint8_t chords = 0;

    int vertex_count() const;
    int edge_count() const;
    ThreePcFamily family() const;
    // Lengths ascending, chorded paths after unchorded ones of equal length;
    // a theta chord is always recorded on path 1.
    ThreePcSpec canonical() const;

    bool operator==(const ThreePcSpec&) const = default;
    auto operator<=>(const ThreePcSpec&) const = default;
};

enum class ShortKind : std::uint8_t { ShortPrism, ShortPyramid };

struct ShortVariantSpec {
    ShortKind kind = ShortKind::ShortPrism;
    std::array<int, 3> lengths{1, 1, 1};
    bool operator==(const ShortVariantSpec&) const = default;
};

// Cycle 0..cycle_len-1 plus a hub (label cycle_len) adjacent to the listed
// cycle positions. A triangle rim is allowed, so K4 is a wheel.
struct WheelSpec {
    int cycle_len = 3;
    std::vector<int> hub_neighbors;
    bool operator==(const WheelSpec&) const = default;
};

// Labels: triangle/branch vertices first (k1 k2 k3 l1 l2 l3 for a prism,
// k1 k2 k3 l for a pyramid, a b for a theta), then the internal vertices of
// P1, P2, P3 in order from their k (or a) end.
Graph build_3pc(const ThreePcSpec& spec);
Graph build_short_variant(ShortKind kind, const std::array<int, 3>& lengths);
Graph build_wheel(const WheelSpec& spec);

// Throws the same errors as build_3pc without building.
void validate_spec(const ThreePcSpec& spec);

// All canonical specs on exactly n vertices, in ascending spec order.
std::vector<ThreePcSpec> three_pc_specs_with_vertices(int n);

// The canonical spec of the first (in spec order) 3PC isomorphic to g.
std::optional<ThreePcSpec> recognize_3pc(const Graph& g);

// Canonical spec pairs on n vertices that build isomorphic graphs; empty when
// recognition is unambiguous at that size.
std::vector<std::pair<ThreePcSpec, ThreePcSpec>> recognition_collisions(int n);

// Cheap necessary condition for being a 3PC on popcount(within) vertices:
// the induced degree multiset matches some 3PC of that size.
bool may_be_3pc_within(const Graph& g, Mask within);

// Family spec text:
//   theta:2,2,3   theta+1:2,2,3   pyramid+13:2,3,2   prism:2,2,2
//   shortprism:1,2,2   shortpyramid:1,2,2   wheel:6@0,2,4
// Digits after '+' are the chorded path indices (1-based).
using FamilySpec = std::variant<ThreePcSpec, ShortVariantSpec, WheelSpec>;

FamilySpec parse_family_spec(std::string_view text);
std::string format_spec(const ThreePcSpec& spec);
std::string format_family_spec(const FamilySpec& spec);
Graph build_family(const FamilySpec& spec);

}  // namespace obstructa
