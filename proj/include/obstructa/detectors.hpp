#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "obstructa/families.hpp"
#include "obstructa/graph.hpp"

namespace obstructa {

struct WheelWitness {
    int hub = -1;
    std::vector<int> rim;  // induced cycle of G - hub, starting at its least vertex
};

// Wheel in the broad sense: any induced cycle (triangles included) plus a
// vertex off the cycle with at least three neighbours on it. K4 is a wheel
// here. Hubs are tried by label; rims by induced-cycle enumeration anchored
// at their least vertex.
std::optional<WheelWitness> find_induced_wheel(const Graph& g);
bool is_wheel_free(const Graph& g);

// Bit (1 << ThreePcFamily) selects a family.
using FamilyFilter = std::uint8_t;
inline constexpr FamilyFilter kAllFamilies = 0x3F;
constexpr FamilyFilter family_bit(ThreePcFamily f) { return static_cast<FamilyFilter>(1U << static_cast<int>(f)); }

struct ThreePcWitness {
    ThreePcSpec spec;
    VertexSet embedding;
};

inline constexpr int kMaxDetectionVertices = 20;

// First vertex subset (size ascending, then lexicographic) inducing a 3PC of
// an allowed family. Throws TooLarge above 20 vertices.
std::optional<ThreePcWitness> find_induced_3pc(const Graph& g, FamilyFilter families = kAllFamilies);

// theta-, wheel- and pyramid-free.
bool is_only_prism(const Graph& g);

struct ClassificationRecord {
    bool two_connected = false;
    bool wheel_free = false;
    bool contains_3pc = false;
    bool hamiltonian = false;
    bool hc_obstruction = false;
    std::optional<ThreePcSpec> recognized_3pc;

    bool operator==(const ClassificationRecord&) const = default;
};

inline constexpr int kMaxClassifyVertices = 16;

ClassificationRecord classify(const Graph& g);

}  // namespace obstructa
