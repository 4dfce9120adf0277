#pragma once

#include "ehh/graph.hpp"

#include <string>
#include <string_view>

namespace ehh {

/// edgelist: "p <n> <m>" then m lines "<u> <v>", 0-based.
/// dimacs:   DIMACS .col, "c" comments, "p edge <n> <m>", "e <u> <v>", 1-based.
enum class GraphFormat { edgelist, dimacs };

GraphFormat parse_format(std::string_view name);

/// Throws ParseError (with the 1-based line number) on malformed lines, ids
/// outside the graph, self-loops, duplicate edges and edge-count mismatches.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical text: header, then edges sorted with u < v.
std::string emit_graph(const Graph& g, GraphFormat format);

} // namespace ehh
