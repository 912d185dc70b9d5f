#include "lkcds/core.hpp"

#include <algorithm>

#include "lkcds/domset.hpp"
#include "lkcds/oracles.hpp"

namespace lkcds {

std::string to_string(Certification c) {
  switch (c) {
    case Certification::exhaustive: return "exhaustive";
    case Certification::heuristic_sound: return "heuristic-sound";
    case Certification::trivial: return "trivial";
  }
  return "?";
}

std::string to_string(CoreMode m) {
  switch (m) {
    case CoreMode::exact: return "exact";
    case CoreMode::heuristic: return "heuristic";
    case CoreMode::trivial: return "trivial";
  }
  return "?";
}

CoreMode parse_core_mode(std::string_view name) {
  if (name == "exact") return CoreMode::exact;
  if (name == "heuristic") return CoreMode::heuristic;
  if (name == "trivial") return CoreMode::trivial;
  throw DomainError("unknown core mode '" + std::string(name) + "'");
}

namespace {

std::vector<VertexSet> balls(const Graph& g, int r) {
  std::vector<VertexSet> out(g.order());
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) out[static_cast<std::size_t>(v)] = bfs_layers(g, {v}, r).reached_set();
  return out;
}

// Is there D of size <= k, disjoint from `avoid`, r-dominating `targets`?
bool dominated_avoiding(const Graph& g, const std::vector<VertexSet>& ball, const VertexSet& targets,
                        const VertexSet& avoid, int k, const SearchBudget& budget) {
  std::vector<Vertex> index_of(g.order(), -1);
  for (std::size_t i = 0; i < targets.size(); ++i) index_of[static_cast<std::size_t>(targets[i])] = static_cast<Vertex>(i);
  std::vector<Bits> cover;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (avoid.contains(v)) continue;
    Bits bits(targets.size());
    for (Vertex w : ball[static_cast<std::size_t>(v)])
      if (index_of[static_cast<std::size_t>(w)] >= 0) bits.set(static_cast<std::size_t>(index_of[static_cast<std::size_t>(w)]));
    cover.push_back(std::move(bits));
  }
  CoverSearch search(targets.size(), std::move(cover), budget);
  const auto res = search.any(static_cast<std::size_t>(k));
  if (res.status == CoverSearch::Status::exhausted) throw BudgetError("core search exceeded its node budget");
  return res.status == CoverSearch::Status::found;
}

// z goes when another member's ball sits inside z's ball: whatever dominates
// that member dominates z too.
bool heuristic_pass(const std::vector<VertexSet>& ball, VertexSet& z) {
  bool changed = false;
  const auto snapshot = z.members();
  for (auto it = snapshot.rbegin(); it != snapshot.rend(); ++it) {
    const Vertex v = *it;
    for (Vertex w : z)
      if (w != v && ball[static_cast<std::size_t>(v)].includes(ball[static_cast<std::size_t>(w)])) {
        z.erase(v);
        changed = true;
        break;
      }
  }
  return changed;
}

}  // namespace

CoreOutcome find_core(const Graph& g, int k, int r, CoreMode mode, SearchBudget budget) {
  if (k < 1 || r < 1) throw DomainError("core needs k >= 1 and r >= 1");
  if (!is_connected(g)) throw DomainError("core needs a connected graph");
  DominationCore core{VertexSet::range(g.order()), k, r, Certification::trivial};
  if (mode == CoreMode::trivial) return core;

  if (mode == CoreMode::exact) {
    const auto ds = exact_ds(g, r, k, budget);
    if (ds.status == SolveResult::Status::exhausted) throw BudgetError("domination search exceeded its node budget");
    if (!ds.found()) return Reject{"no distance-" + std::to_string(r) + " dominating set of size <= " + std::to_string(k)};
  }

  const auto ball = balls(g, r);
  while (heuristic_pass(ball, core.z)) {
  }
  core.certified = Certification::heuristic_sound;
  if (mode == CoreMode::heuristic) return core;

  for (bool changed = true; changed;) {
    changed = heuristic_pass(ball, core.z);
    const auto snapshot = core.z.members();
    for (auto it = snapshot.rbegin(); it != snapshot.rend(); ++it) {
      const Vertex v = *it;
      VertexSet rest = core.z;
      rest.erase(v);
      if (!dominated_avoiding(g, ball, rest, ball[static_cast<std::size_t>(v)], k, budget)) {
        core.z = std::move(rest);
        changed = true;
      }
    }
  }
  core.certified = Certification::exhaustive;
  return core;
}

CoreOutcome connected_core(const Graph& g, const DominationCore& core) {
  if (core.z.empty()) throw DomainError("empty core");
  const auto dist = bfs_layers(g, core.z, 2 * core.r);
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    if (!dist.reached(v))
      return Reject{"vertex " + std::to_string(v) + " is farther than 2r from the core"};
  DominationCore out = core;
  out.z = core.z.unite(connect(g, core.z, 2 * core.r));
  return out;
}

bool core_verify(const Graph& g, const VertexSet& z, int k, int r, SearchBudget budget) {
  const auto ball = balls(g, r);
  // a counterexample D dominates Z but misses some v, i.e. avoids N_r[v]
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (z.contains(v)) continue;
    if (dominated_avoiding(g, ball, z, ball[static_cast<std::size_t>(v)], k, budget)) return false;
  }
  return true;
}

}  // namespace lkcds
