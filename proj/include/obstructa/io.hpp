#pragma once

#include <string>
#include <string_view>

#include "obstructa/graph.hpp"

namespace obstructa {

// graph6, short form only (n <= 62). Bits walk the upper triangle column by
// column: (0,1), (0,2), (1,2), (0,3), ... packed six per printable byte.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Same bit layout as graph6 but with the long size prefix for 63 <= n <= 64.
// Used for canonical forms, which must cover every graph the library accepts.
std::string encode_graph6_any(const Graph& g);

// Plain edge list: first token n, then whitespace-separated pairs "u v".
// Lines starting with '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace obstructa
