#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "lkcds/graph.hpp"

namespace lkcds {

/// Shortest A-avoiding distances from a vertex u outside A to the vertices of A,
/// capped at r. Only finite entries (1..r) are stored, sorted by core vertex.
struct ProjectionProfile {
  int r = 0;
  std::vector<std::pair<Vertex, int>> entries;

  /// Distance to `a`, or kUnreached for infinity.
  int at(Vertex a) const;
  /// The r-projection: core vertices with a finite entry.
  VertexSet support() const;

  friend bool operator==(const ProjectionProfile&, const ProjectionProfile&) = default;
  friend auto operator<=>(const ProjectionProfile&, const ProjectionProfile&) = default;
};

/// Partition of V(G) \ X by equal r-projection profiles onto X.
///
/// Classes are numbered by the canonical (lexicographic) order of their profiles;
/// each class's representative is its smallest member.
struct ProfileClassification {
  std::vector<int> class_of;  // -1 for vertices of X
  std::vector<Vertex> representatives;
  std::vector<ProjectionProfile> profiles;
  std::vector<VertexSet> members;

  std::size_t num_classes() const { return profiles.size(); }
};

/// M_r(u, A). Throws DomainError if u is in A.
VertexSet projection(const Graph& g, Vertex u, const VertexSet& a, int r);
/// rho_r[u, A]. Throws DomainError if u is in A.
ProjectionProfile profile(const Graph& g, Vertex u, const VertexSet& a, int r);
/// One X-avoiding flood per vertex of X.
ProfileClassification classify(const Graph& g, const VertexSet& x, int r);
/// Number of distinct profiles realised on V(G) \ A.
std::size_t mu_hat(const Graph& g, const VertexSet& a, int r);

}  // namespace lkcds
