#pragma once

#include <span>
#include <string>
#include <string_view>

#include "arcmatch/core.hpp"

namespace arcmatch {

enum class TextForm { EdgeList, ChordWord };

// Accepts either form; a '-' anywhere selects the edge list. Chord words
// with more than 26 distinct labels are written as space-separated labels.
// Syntax errors throw ParseError with a 1-based character position.
Matching parse_matching(std::string_view text);

std::string format_matching(const Matching& m, TextForm form);

// "a-b a-b ..." in the given order.
std::string format_edges(std::span<const Edge> edges);
inline std::string format_edge_list(const Matching& m) { return format_edges(m.edges()); }

// Bijective base-26 label: 0 -> A, 25 -> Z, 26 -> AA, 27 -> AB, ...
std::string chord_label(std::size_t index);

// Single "a-b" token, either orientation.
Edge parse_edge(std::string_view token);

}  // namespace arcmatch
