#include "lkcds/projections.hpp"

#include <algorithm>
#include <map>

namespace lkcds {

int ProjectionProfile::at(Vertex a) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), std::pair<Vertex, int>{a, 0},
                             [](const auto& x, const auto& y) { return x.first < y.first; });
  return it != entries.end() && it->first == a ? it->second : kUnreached;
}

VertexSet ProjectionProfile::support() const {
  std::vector<Vertex> out;
  out.reserve(entries.size());
  for (const auto& [a, d] : entries) out.push_back(a);
  return VertexSet::from_sorted(std::move(out));
}

namespace {

void check_query(const Graph& g, Vertex u, const VertexSet& a, int r) {
  if (!g.valid(u)) throw DomainError("vertex out of range");
  if (r < 1) throw DomainError("projection radius must be >= 1");
  if (a.contains(u)) throw DomainError("profiles are defined only for vertices outside A");
}

}  // namespace

ProjectionProfile profile(const Graph& g, Vertex u, const VertexSet& a, int r) {
  check_query(g, u, a, r);
  const auto dist = bfs_layers(g, VertexSet{u}, r, a);
  ProjectionProfile p{r, {}};
  for (Vertex x : a)
    if (dist.reached(x)) p.entries.emplace_back(x, dist[x]);
  return p;
}

VertexSet projection(const Graph& g, Vertex u, const VertexSet& a, int r) {
  return profile(g, u, a, r).support();
}

ProfileClassification classify(const Graph& g, const VertexSet& x, int r) {
  if (r < 1) throw DomainError("projection radius must be >= 1");
  const std::size_t n = g.order();
  std::vector<ProjectionProfile> of_vertex(n, ProjectionProfile{r, {}});
  for (Vertex root : x) {
    // the flood stops at other X vertices: they are reached but never expanded
    const auto dist = bfs_layers(g, VertexSet{root}, r, x);
    for (Vertex w = 0; w < static_cast<Vertex>(n); ++w)
      if (dist[w] > 0 && !x.contains(w)) of_vertex[static_cast<std::size_t>(w)].entries.emplace_back(root, dist[w]);
  }

  std::map<ProjectionProfile, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    if (!x.contains(v)) groups[of_vertex[static_cast<std::size_t>(v)]].push_back(v);

  ProfileClassification out;
  out.class_of.assign(n, -1);
  for (auto& [prof, verts] : groups) {
    const int id = static_cast<int>(out.profiles.size());
    for (Vertex v : verts) out.class_of[static_cast<std::size_t>(v)] = id;
    out.representatives.push_back(verts.front());
    out.profiles.push_back(prof);
    out.members.push_back(VertexSet::from_sorted(std::move(verts)));
  }
  return out;
}

std::size_t mu_hat(const Graph& g, const VertexSet& a, int r) { return classify(g, a, r).num_classes(); }

}  // namespace lkcds
