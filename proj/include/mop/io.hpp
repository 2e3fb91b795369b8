#pragma once

#include <string>

#include "mop/core.hpp"

namespace mop {

// Canonical serialization, bit-exact:
//   {"n":5,"chords":[[0,2],[0,3]]}\n
// with chords as sorted pairs in lexicographic order.
std::string to_graph_json(const MopGraph& g);

// Accepts any JSON whitespace; throws ParseError on malformed input.
MopGraph parse_graph_json(const std::string& text);

MopGraph load_graph_file(const std::string& path);
void write_graph_file(const MopGraph& g, const std::string& path);

// Compact chord-list id for CSV cells, e.g. "0-2;0-3" ("-" for none).
std::string chords_id(const std::vector<VertexPair>& chords);

}  // namespace mop
