#include "forge/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "forge/named_graphs.hpp"

namespace forge {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw std::invalid_argument(std::string("invalid graph6 character '") + c + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw std::invalid_argument("truncated graph6 size field");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    pos = 4;
  } else {
    if (text.size() < 8) throw std::invalid_argument("truncated graph6 size field");
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
    pos = 8;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw std::invalid_argument("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                std::to_string(expected));
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  // padding bits must be zero
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    if (last & ((1 << (6 - static_cast<int>(bits % 6))) - 1)) throw std::invalid_argument("non-zero graph6 padding");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list needs an 'n m' header");
  Graph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    long long u = 0;
    long long v = 0;
    if (!(is >> u >> v)) throw std::invalid_argument("edge list ended after " + std::to_string(e) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge list vertex out of range");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw std::invalid_argument("parallel edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (is >> trailing) throw std::invalid_argument("unexpected trailing content in edge list");
  return g;
}

Graph parse_graph_text(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.front()))) return from_edge_list(t);
  return from_graph6(t);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path.string());
  if (path.extension() == ".g6")
    out << to_graph6(g) << '\n';
  else
    out << to_edge_list(g);
}

Graph resolve_graph_argument(const std::string& arg) {
  if (arg.rfind("g6:", 0) == 0) return from_graph6(std::string_view(arg).substr(3));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_graph_file(arg);
  if (auto g = named::by_name(arg)) return *g;
  throw std::invalid_argument("'" + arg + "' is neither a graph file, a g6: literal, nor a known graph name");
}

}  // namespace forge
