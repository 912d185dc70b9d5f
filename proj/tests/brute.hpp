#pragma once

// Slow reference implementations used only by tests. Nothing here calls the
// library's search or traversal code.

#include <cstdint>
#include <optional>
#include <vector>

#include "lkcds/graph.hpp"

namespace brute {

using lkcds::Graph;
using lkcds::Vertex;
using lkcds::VertexSet;

constexpr int kInf = 1 << 28;

/// All-pairs distances by Floyd-Warshall; kInf when unreachable.
std::vector<std::vector<int>> floyd(const Graph& g);

/// Avoiding distances from u to each a in A: shortest paths inside G - A,
/// then one last edge into a. Entries above r are dropped. Returned as (a, d)
/// pairs sorted by a.
std::vector<std::pair<Vertex, int>> split_profile(const Graph& g, Vertex u, const VertexSet& a, int r);

bool dominates(const std::vector<std::vector<int>>& dist, const VertexSet& d, int r, const VertexSet& targets);
bool connected(const Graph& g, const VertexSet& s);

/// Every subset of V(g) as a sorted VertexSet, by increasing size then lexicographically.
std::vector<VertexSet> subsets_by_size(std::size_t n, std::size_t max_size);

/// Minimum size of an r-dominating set of `targets`, optionally connected.
std::optional<int> min_dom(const Graph& g, int r, const VertexSet& targets, bool connected_only, int cap);

/// Minimum number of vertices of a connected subgraph touching every group.
std::optional<int> min_group_tree(const Graph& g, const std::vector<VertexSet>& groups);

/// WReach_s by enumerating all simple paths of length <= s.
std::vector<VertexSet> wreach(const Graph& g, const std::vector<Vertex>& order, int s);

std::optional<int> min_setcover(int universe, const std::vector<std::vector<int>>& sets, int cap);

}  // namespace brute
