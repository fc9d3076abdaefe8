#pragma once

#include <string>
#include <string_view>

#include "turanpack/graph.hpp"
#include "turanpack/hypergraph.hpp"

namespace turanpack {

// graph6 short form: byte n+63, then the upper triangle in column-major
// order packed MSB-first into 6-bit chunks, each chunk +63. Orders 0..62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// {"n":int,"p":int,"edges":[[sorted ints],...]} with the edge list sorted
// lexicographically. Parsing is strict; violations carry a byte offset.
std::string to_hjson(const Hypergraph& h);
Hypergraph from_hjson(std::string_view text);

// Auto-detects by first byte: '{' means hypergraph JSON, anything else
// graph6. Used by the CLI's -g inputs.
Hypergraph parse_host_text(std::string_view text);

} // namespace turanpack
