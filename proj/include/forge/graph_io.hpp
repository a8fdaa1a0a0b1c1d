#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "forge/graph.hpp"

namespace forge {

/// graph6 without the optional ">>graph6<<" header. Parsing accepts the header
/// and trailing whitespace.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// "n m" header line followed by m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Reads graph6 or edge-list content; the format is sniffed from the text.
Graph parse_graph_text(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

/// Resolves a command-line graph argument: an existing file, "g6:<code>",
/// or a named family (see named_graph).
Graph resolve_graph_argument(const std::string& arg);

}  // namespace forge
