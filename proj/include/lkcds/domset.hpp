#pragma once

#include <vector>

#include "lkcds/graph.hpp"
#include "lkcds/rational.hpp"
#include "lkcds/steiner.hpp"

namespace lkcds {

/// Every target lies within distance r of D.
bool dominates(const Graph& g, const VertexSet& d, int r, const VertexSet& targets);
bool dominates(const Graph& g, const VertexSet& d, int r);

/// D is nonempty, induces a connected subgraph and r-dominates V(g).
bool is_connected_dominating(const Graph& g, const VertexSet& d, int r);

struct ConnectResult {
  VertexSet added;          // Q
  std::size_t components;   // p, the number of components of G[D]
  std::vector<int> merge_costs;  // internal vertices absorbed per merge
};

/// Repeatedly absorbs the interior of a globally shortest path between two
/// components of G[D u Q] (ties: smallest endpoints). Throws ContractError if
/// a merge needs more than 2r internal vertices or no path exists.
ConnectResult connect_components(const Graph& g, const VertexSet& d, int r);
VertexSet connect(const Graph& g, const VertexSet& d, int r);

struct CoveringFamily {
  std::vector<SteinerTree> trees;
  Rational t;

  std::size_t total_size() const;
};

struct CoveringReport {
  bool covers = true;
  bool pieces_are_subtrees = true;
  bool piece_sizes_ok = true;  // every piece has at most floor(2t) vertices
  bool count_ok = true;        // |F| <= n/t + 1
  bool total_ok = true;        // sum |V(T)| <= (1 + 1/t) n + 1

  bool all() const { return covers && pieces_are_subtrees && piece_sizes_ok && count_ok && total_ok; }
};

/// Splits a BFS spanning tree from vertex 0 bottom-up into pieces of at most
/// floor(2t) vertices. Structural properties are always asserted; the counting
/// bounds are asserted when 2*ceil(t) - 1 <= floor(2t), and only reported
/// otherwise (see check_covering_family). Throws DomainError on a
/// disconnected graph or t < 1/2.
CoveringFamily covering_family(const Graph& g, const Rational& t);
CoveringReport check_covering_family(const Graph& g, const CoveringFamily& family);

/// Max-coverage greedy; ties go to the smallest id.
VertexSet greedy_rdom(const Graph& g, int r, const VertexSet& targets);

}  // namespace lkcds
