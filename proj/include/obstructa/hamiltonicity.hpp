#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "obstructa/certificate.hpp"
#include "obstructa/graph.hpp"

namespace obstructa {

struct HamResult {
    bool found = false;
    std::vector<int> sequence;  // cycle (closing edge implicit) or path
};

// Exact backtracking anchored at vertex 0. A found cycle starts at 0 and its
// second vertex is the smaller of 0's two cycle neighbours.
HamResult find_hamiltonian_cycle(const Graph& g);

// Exact; the lexicographically least Hamiltonian path is returned.
HamResult find_hamiltonian_path(const Graph& g);

// Decision-only variant over the subgraph induced by `within`.
bool has_hamiltonian_cycle_within(const Graph& g, Mask within);

enum class ObstructionFailure { None, NotTwoConnected, Hamiltonian, NonMinimal };

std::string_view to_string(ObstructionFailure f);

struct ObstructionVerdict {
    bool is_obstruction = false;
    ObstructionFailure failure_reason = ObstructionFailure::None;
    std::optional<Certificate> witness;
};

inline constexpr int kMaxObstructionVertices = 16;

// 2-connected, non-Hamiltonian, and every proper induced subgraph on at least
// three vertices is either not 2-connected or Hamiltonian. The NonMinimal
// witness is the first offending subset by size descending, then
// lexicographic. Throws TooLarge above 16 vertices.
ObstructionVerdict is_hc_obstruction(const Graph& g);

// Re-checks a verdict's witness, including the semantic NonMinimal condition.
bool validate_verdict(const Graph& g, const ObstructionVerdict& verdict);

}  // namespace obstructa
