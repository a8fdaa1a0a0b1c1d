#include "forge/named_graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace forge::named {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(static_cast<int>(v - 1), static_cast<int>(v));
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, static_cast<int>(n - 1));
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, static_cast<int>(v));
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    n += parts[p];
    part_of.insert(part_of.end(), parts[p], p);
  }
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

namespace {

std::optional<std::vector<std::size_t>> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{}) return std::nullopt;
    out.push_back(value);
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (!text.empty()) {
      if (text.front() != ',') return std::nullopt;
      text.remove_prefix(1);
      if (text.empty()) return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Graph> by_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "petersen") return petersen();
  if (name.size() < 2) return std::nullopt;
  const char family = name.front();
  std::string_view rest = name.substr(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  auto sizes = parse_sizes(rest);
  if (!sizes) return std::nullopt;
  if (family == 'K') {
    if (sizes->size() == 1) return complete(sizes->front());
    return complete_multipartite(*sizes);
  }
  if (sizes->size() != 1) return std::nullopt;
  const std::size_t n = sizes->front();
  switch (family) {
    case 'C':
      if (n < 3) return std::nullopt;
      return cycle(n);
    case 'P':
      return path(n);
    case 'E':
      return empty(n);
    case 'S':
      return star(n);
    default:
      return std::nullopt;
  }
}

}  // namespace forge::named
