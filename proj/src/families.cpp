#include "lkcds/families.hpp"

#include <random>
#include <set>

namespace lkcds::families {

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph::from_edges(n, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * cols + j); };
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < rows) edges.push_back({id(i, j), id(i + 1, j)});
    }
  return Graph::from_edges(rows * cols, edges);
}

namespace {

std::set<Edge> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::set<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    edges.insert(normalized({static_cast<Vertex>(pick(rng)), static_cast<Vertex>(v)}));
  }
  return edges;
}

}  // namespace

Graph random_tree_with_chords(std::size_t n, std::size_t chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = random_tree_edges(n, rng);
  const std::size_t max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<std::size_t> pick(0, n ? n - 1 : 0);
  while (chords > 0 && edges.size() < max_edges) {
    Vertex a = static_cast<Vertex>(pick(rng)), b = static_cast<Vertex>(pick(rng));
    if (a == b) continue;
    if (edges.insert(normalized({a, b})).second) --chords;
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = random_tree_edges(n, rng);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.insert({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

}  // namespace lkcds::families
