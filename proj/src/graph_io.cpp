#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "lkcds/graph.hpp"

namespace lkcds {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

struct RawGraph {
  std::optional<long long> n;
  std::optional<long long> m;
  std::vector<std::pair<Edge, std::size_t>> edges;  // edge and its line
};

Graph finish(const RawGraph& raw) {
  long long n = raw.n.value_or(0);
  if (!raw.n)
    for (const auto& [e, line] : raw.edges) n = std::max<long long>(n, std::max(e.u, e.v) + 1LL);
  if (raw.m && static_cast<std::size_t>(*raw.m) != raw.edges.size())
    throw ParseError(1, "header declares " + std::to_string(*raw.m) + " edges, found " +
                            std::to_string(raw.edges.size()));
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [e, line] : raw.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw ParseError(line, "vertex id out of range");
    if (e.u == e.v) throw ParseError(line, "self-loop at vertex " + std::to_string(e.u));
    auto& list = adj[static_cast<std::size_t>(std::min(e.u, e.v))];
    const Vertex other = std::max(e.u, e.v);
    if (std::find(list.begin(), list.end(), other) != list.end())
      throw ParseError(line, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    list.push_back(other);
    edges.push_back(e);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  RawGraph raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto tok = tokens(view);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (seen_content) throw ParseError(line_no, "header must precede edges");
      if (tok.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      raw.n = to_int(tok[1], line_no);
      raw.m = to_int(tok[2], line_no);
      if (*raw.n < 0 || *raw.m < 0) throw ParseError(line_no, "negative header value");
      seen_content = true;
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected 'u v'");
    raw.edges.push_back({Edge{static_cast<Vertex>(to_int(tok[0], line_no)),
                              static_cast<Vertex>(to_int(tok[1], line_no))},
                         line_no});
    seen_content = true;
  }
  return finish(raw);
}

// DIMACS / PACE style: 'c' comments, 'p <kind> n m' header, edges 'u v' or 'e u v', 1-based.
Graph parse_dimacs(std::string_view text) {
  RawGraph raw;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (raw.n) throw ParseError(line_no, "repeated header");
      if (tok.size() != 4) throw ParseError(line_no, "header must be 'p <kind> <n> <m>'");
      raw.n = to_int(tok[2], line_no);
      raw.m = to_int(tok[3], line_no);
      continue;
    }
    std::size_t first = tok[0] == "e" ? 1 : 0;
    if (tok.size() != first + 2) throw ParseError(line_no, "expected '[e] u v'");
    if (!raw.n) throw ParseError(line_no, "edge before header");
    const auto u = to_int(tok[first], line_no), v = to_int(tok[first + 1], line_no);
    if (u < 1 || v < 1) throw ParseError(line_no, "DIMACS ids are 1-based");
    raw.edges.push_back({Edge{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)}, line_no});
  }
  if (!raw.n) throw ParseError(line_no, "missing header");
  return finish(raw);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw DomainError("unknown graph format '" + std::string(name) + "'");
}

}  // namespace lkcds
