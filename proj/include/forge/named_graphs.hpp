#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "forge/graph.hpp"

namespace forge::named {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph complete_multipartite(const std::vector<std::size_t>& parts);

/// Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes i -- i+5.
Graph petersen();

/// Parses names like "K5", "K_5", "C6", "P4", "E3", "S4", "K3,3", "K2,2,2",
/// "petersen" (case-insensitive for the latter).
std::optional<Graph> by_name(std::string_view name);

}  // namespace forge::named
