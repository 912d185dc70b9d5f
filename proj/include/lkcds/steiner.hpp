#pragma once

#include <optional>
#include <vector>

#include "lkcds/graph.hpp"

namespace lkcds {

/// Terminal or group query. In terminal mode every terminal is its own group.
struct SteinerQuery {
  enum class Mode { terminals, groups };

  Mode mode = Mode::terminals;
  VertexSet terminals;
  std::vector<VertexSet> groups;
  std::optional<int> size_cap;  // in vertices
  int group_limit = 8;

  static SteinerQuery of_terminals(VertexSet terminals, std::optional<int> cap = std::nullopt);
  static SteinerQuery of_groups(std::vector<VertexSet> groups, std::optional<int> cap = std::nullopt);
};

struct SteinerTree {
  VertexSet vertices;
  std::vector<Edge> edges;
  std::vector<Vertex> touched;  // one vertex per group, in group order

  int size() const { return static_cast<int>(vertices.size()); }
};

struct SteinerOutcome {
  enum class Status { found, exceeds_cap, infeasible };

  Status status = Status::infeasible;
  std::optional<SteinerTree> tree;

  bool found() const { return status == Status::found; }
};

/// Minimum-vertex (group) Steiner tree by dynamic programming over
/// (vertex, subset of groups). Throws DomainError for empty, overlapping or
/// too many groups.
SteinerOutcome steiner_exact(const Graph& g, const SteinerQuery& q);

/// Vertex count of a minimum tree, ignoring size_cap; nullopt when infeasible.
std::optional<int> st_value(const Graph& g, const SteinerQuery& q);

/// True iff `tree` is a tree in g touching every group of q.
bool valid_steiner_tree(const Graph& g, const SteinerQuery& q, const SteinerTree& tree);

}  // namespace lkcds
