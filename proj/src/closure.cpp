#include "lkcds/closure.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lkcds {

namespace {

// Minimum plain distance between members of each pair of classes.
std::vector<std::vector<int>> class_distances(const Graph& g, const ProfileClassification& pc) {
  const std::size_t c = pc.num_classes();
  std::vector<std::vector<int>> out(c, std::vector<int>(c, kUnreached));
  for (std::size_t a = 0; a < c; ++a) {
    const auto dist = bfs_layers(g, pc.members[a], -1);
    for (std::size_t b = 0; b < c; ++b) {
      int best = kUnreached;
      for (Vertex v : pc.members[b])
        if (dist.reached(v) && (best == kUnreached || dist[v] < best)) best = dist[v];
      out[a][b] = best;
    }
  }
  return out;
}

SteinerQuery class_query(const ProfileClassification& pc, const ClassSubset& subset, std::optional<int> cap) {
  std::vector<VertexSet> groups;
  for (int c : subset) groups.push_back(pc.members[static_cast<std::size_t>(c)]);
  auto q = SteinerQuery::of_groups(std::move(groups), cap);
  q.group_limit = std::max<int>(q.group_limit, static_cast<int>(subset.size()));
  return q;
}

// Depth-first over class subsets of size <= cap with st <= cap. Supersets of
// a subset whose tree exceeds the cap are skipped: adding groups never makes
// the tree smaller.
void enumerate_subsets(const Graph& g, const ProfileClassification& pc, int cap,
                       const std::function<void(const ClassSubset&, const SteinerTree&)>& keep,
                       std::size_t& enumerated) {
  const auto dist = class_distances(g, pc);
  const int c = static_cast<int>(pc.num_classes());
  ClassSubset subset;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(subset.size()) == cap) return;
    for (int next = from; next < c; ++next) {
      bool close = true;
      for (int prev : subset) {
        const int d = dist[static_cast<std::size_t>(prev)][static_cast<std::size_t>(next)];
        if (d == kUnreached || d > cap - 1) {
          close = false;
          break;
        }
      }
      if (!close) continue;
      subset.push_back(next);
      ++enumerated;
      auto out = steiner_exact(g, class_query(pc, subset, cap));
      if (out.found()) {
        keep(subset, *out.tree);
        grow(next + 1);
      }
      subset.pop_back();
    }
  };
  grow(0);
}

VertexSet to_local(const SubgraphWitness& w, std::size_t host_order, const VertexSet& host) {
  const auto inverse = w.from_host(host_order);
  std::vector<Vertex> out;
  for (Vertex v : host)
    if (inverse[static_cast<std::size_t>(v)] >= 0) out.push_back(inverse[static_cast<std::size_t>(v)]);
  return VertexSet(std::move(out));
}

ProjectionProfile to_host(const ProjectionProfile& p, const SubgraphWitness& w) {
  ProjectionProfile out{p.r, {}};
  for (auto [a, d] : p.entries) out.entries.push_back({w.to_host(a), d});
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

}  // namespace

ClosureResult build_closure(const Graph& g, const VertexSet& x, int r, const Rational& t) {
  if (x.empty()) throw DomainError("closure needs a nonempty X");
  if (r < 1) throw DomainError("closure needs r >= 1");
  const auto cap = floor_of(2 * t);
  if (cap < 1) throw DomainError("floor(2t) must be at least 1");

  ClosureResult out;
  out.t = t;
  out.cap = static_cast<int>(cap);
  out.r = r;
  out.classes = classify(g, x, r);

  std::set<Vertex> verts(x.begin(), x.end());
  std::set<Edge> edges;
  std::set<Vertex> terminals;
  enumerate_subsets(
      g, out.classes, out.cap,
      [&](const ClassSubset& subset, const SteinerTree& tree) {
        out.kept_trees.emplace(subset, tree);
        verts.insert(tree.vertices.begin(), tree.vertices.end());
        edges.insert(tree.edges.begin(), tree.edges.end());
        terminals.insert(tree.touched.begin(), tree.touched.end());
      },
      out.stats.enumerated);

  // shortest X-avoiding paths from each terminal to its projection
  for (Vertex u : terminals) {
    const auto tree = bfs_tree(g, {u}, r, x);
    for (Vertex a : x) {
      if (!tree.dist.reached(a)) continue;
      const auto path = tree.path_to_root(a);
      for (std::size_t i = 0; i < path.size(); ++i) {
        verts.insert(path[i]);
        if (i + 1 < path.size()) edges.insert(normalized({path[i], path[i + 1]}));
      }
    }
  }
  for (Vertex a : x)
    for (Vertex b : g.neighbors(a))
      if (a < b && x.contains(b)) edges.insert({a, b});

  const std::vector<Edge> edge_list(edges.begin(), edges.end());
  auto sub = edge_subgraph(g, VertexSet(std::vector<Vertex>(verts.begin(), verts.end())), edge_list);
  out.gprime = std::move(sub.graph);
  out.witness = std::move(sub.witness);
  out.x = to_local(out.witness, g.order(), x);
  out.terminals = VertexSet(std::vector<Vertex>(terminals.begin(), terminals.end()));
  out.stats.x_size = x.size();
  out.stats.classes = out.classes.num_classes();
  out.stats.kept = out.kept_trees.size();
  out.stats.gprime_order = out.gprime.order();
  out.stats.gprime_edges = out.gprime.num_edges();
  return out;
}

ClosureReport verify_closure(const Graph& g, const VertexSet& x, int r, const Rational& t, const Graph& gprime,
                             const SubgraphWitness& witness, const VertexSet& terminals) {
  ClosureReport rep;
  rep.gprime_order = gprime.order();
  if (!witness.certifies(gprime, g)) {
    rep.x_included = false;
    rep.failures.push_back("witness does not embed gprime into g");
    return rep;
  }
  const auto inverse = witness.from_host(g.order());
  for (Vertex a : x)
    if (inverse[static_cast<std::size_t>(a)] < 0) {
      rep.x_included = false;
      rep.failures.push_back("X vertex " + std::to_string(a) + " missing from gprime");
    }
  if (!rep.x_included) return rep;
  const VertexSet xl = to_local(witness, g.order(), x);

  const auto host = classify(g, x, r);
  std::set<ProjectionProfile> realised;
  for (Vertex v = 0; v < static_cast<Vertex>(gprime.order()); ++v)
    if (!xl.contains(v)) realised.insert(to_host(profile(gprime, v, xl, r), witness));
  for (std::size_t c = 0; c < host.num_classes(); ++c)
    if (!realised.count(host.profiles[c])) {
      rep.profiles_surjective = false;
      rep.failures.push_back("profile of class " + std::to_string(c) + " (vertex " +
                             std::to_string(host.representatives[c]) + ") not realised in gprime");
    }

  for (Vertex u : terminals) {
    const Vertex local = inverse[static_cast<std::size_t>(u)];
    if (local < 0 || to_host(profile(gprime, local, xl, r), witness) != profile(g, u, x, r)) {
      rep.terminal_profiles_exact = false;
      rep.failures.push_back("terminal " + std::to_string(u) + " changes its profile in gprime");
    }
  }

  const int cap = static_cast<int>(floor_of(2 * t));
  std::size_t enumerated = 0;
  enumerate_subsets(
      g, host, cap,
      [&](const ClassSubset& subset, const SteinerTree& tree) {
        ++rep.subsets_checked;
        std::vector<VertexSet> groups;
        for (int c : subset) {
          auto local = to_local(witness, g.order(), host.members[static_cast<std::size_t>(c)]);
          groups.push_back(std::move(local));
        }
        std::string label;
        for (int c : subset) label += (label.empty() ? "" : ",") + std::to_string(c);
        if (std::any_of(groups.begin(), groups.end(), [](const VertexSet& s) { return s.empty(); })) {
          rep.steiner_preserved = false;
          rep.failures.push_back("classes {" + label + "}: a class has no vertex in gprime");
          return;
        }
        auto q = SteinerQuery::of_groups(std::move(groups));
        q.group_limit = std::max<int>(q.group_limit, static_cast<int>(subset.size()));
        const auto local = st_value(gprime, q);
        if (!local || *local != tree.size()) {
          rep.steiner_preserved = false;
          rep.failures.push_back("classes {" + label + "}: st in g is " + std::to_string(tree.size()) +
                                 ", in gprime " + (local ? std::to_string(*local) : std::string("inf")));
        }
      },
      enumerated);
  return rep;
}

ClosureReport verify_closure(const Graph& g, const VertexSet& x, const ClosureResult& result) {
  return verify_closure(g, x, result.r, result.t, result.gprime, result.witness, result.terminals);
}

AnalysisGraph build_analysis_graph(const Graph& g, const ClosureResult& result) {
  const int r = result.r;
  const auto& pc = result.classes;
  const VertexSet x = result.witness.to_host(result.x);
  const auto inverse = result.witness.from_host(g.order());

  std::map<int, std::vector<Vertex>> by_class;
  for (Vertex u : result.terminals) by_class[pc.class_of[static_cast<std::size_t>(u)]].push_back(u);

  AnalysisGraph out;
  std::vector<Edge> edges = result.gprime.edges();
  auto next = static_cast<Vertex>(result.gprime.order());
  for (const auto& [cls, members] : by_class) {
    const auto& prof = pc.profiles[static_cast<std::size_t>(cls)];
    if (prof.entries.empty())
      throw DomainError("class " + std::to_string(cls) + " has terminals but an empty projection");
    auto anchor = prof.entries.front();
    for (auto e : prof.entries)
      if (e.second < anchor.second) anchor = e;
    const auto [xk, depth] = anchor;

    const auto tree = bfs_tree(g, {xk}, depth, x);
    std::set<Edge> tk;
    for (Vertex u : members) {
      const auto path = tree.path_to_root(u);
      if (static_cast<int>(path.size()) != depth + 1 || path.back() != xk)
        throw ContractError("terminal " + std::to_string(u) + " is not at the anchor distance");
      for (std::size_t i = 0; i + 1 < path.size(); ++i) tk.insert(normalized({path[i], path[i + 1]}));
    }

    // copy of T_k: terminals are glued, everything else is fresh
    std::map<Vertex, Vertex> copy;
    for (Vertex u : members) copy[u] = inverse[static_cast<std::size_t>(u)];
    auto image = [&](Vertex v) {
      auto [it, fresh] = copy.try_emplace(v, next);
      if (fresh) ++next;
      return it->second;
    };
    const Vertex root = image(xk);
    // subdivided edge a-b becomes a path with 2r new internal vertices
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> chains;
    for (const Edge& e : tk) {
      std::vector<Vertex> chain{image(e.u)};
      for (int i = 0; i < 2 * r; ++i) chain.push_back(next++);
      chain.push_back(image(e.v));
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.push_back({chain[i], chain[i + 1]});
      chains[{e.u, e.v}] = chain;
    }
    for (Vertex u : members) {
      const auto path = tree.path_to_root(u);
      std::vector<Vertex> walk{copy[u]};
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Vertex a = path[i], b = path[i + 1];
        auto chain = chains.at({std::min(a, b), std::max(a, b)});
        if (a > b) std::reverse(chain.begin(), chain.end());
        walk.insert(walk.end(), chain.begin() + 1, chain.end());
      }
      out.leaf_paths[u] = std::move(walk);
    }
    out.roots[cls] = root;
    out.depths[cls] = (2 * r + 1) * depth;
    out.anchor[cls] = xk;
    out.trees[cls] = std::vector<Edge>(tk.begin(), tk.end());
  }
  out.gdot = Graph::from_edges(static_cast<std::size_t>(next), edges);
  return out;
}

TranslationCheck check_translation(const Graph& g, const ClosureResult& result, const AnalysisGraph& analysis,
                                   const ClassSubset& subset) {
  TranslationCheck out;
  if (subset.empty()) return out;
  const auto& pc = result.classes;
  const auto s = st_value(g, class_query(pc, subset, std::nullopt));
  if (!s) {
    out.holds = false;
    return out;
  }
  out.s = *s;
  std::vector<Vertex> roots;
  for (int c : subset) {
    auto it = analysis.roots.find(c);
    if (it == analysis.roots.end()) {
      out.holds = false;
      return out;
    }
    roots.push_back(it->second);
    out.depth_sum += analysis.depths.at(c);
  }

  // forward direction: the kept tree glued to one root path per class
  if (auto kept = result.kept_trees.find(subset); kept != result.kept_trees.end()) {
    const auto inverse = result.witness.from_host(g.order());
    std::set<Vertex> verts;
    std::vector<Edge> edges;
    for (Vertex v : kept->second.vertices) verts.insert(inverse[static_cast<std::size_t>(v)]);
    for (const Edge& e : kept->second.edges)
      edges.push_back(normalized({inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]}));
    for (Vertex u : kept->second.touched) {
      const auto& walk = analysis.leaf_paths.at(u);
      for (std::size_t i = 0; i < walk.size(); ++i) {
        verts.insert(walk[i]);
        if (i + 1 < walk.size()) edges.push_back(normalized({walk[i], walk[i + 1]}));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    SteinerTree tree{VertexSet(std::vector<Vertex>(verts.begin(), verts.end())), edges, {}};
    out.forward_ok = valid_steiner_tree(analysis.gdot, SteinerQuery::of_terminals(VertexSet(roots)), tree) &&
                     tree.size() == out.s + out.depth_sum;
  }

  std::optional<int> best;
  if (subset.size() == 1) {
    std::vector<Vertex> leaves;
    const auto inverse = result.witness.from_host(g.order());
    for (Vertex u : result.terminals)
      if (pc.class_of[static_cast<std::size_t>(u)] == subset.front()) leaves.push_back(inverse[static_cast<std::size_t>(u)]);
    best = st_value(analysis.gdot, SteinerQuery::of_groups({VertexSet{roots.front()}, VertexSet(std::move(leaves))}));
  } else {
    auto q = SteinerQuery::of_terminals(VertexSet(roots));
    q.group_limit = std::max<int>(q.group_limit, static_cast<int>(roots.size()));
    best = st_value(analysis.gdot, q);
  }
  out.gdot_value = best.value_or(-1);
  out.holds = out.forward_ok && best && *best == out.s + out.depth_sum;
  return out;
}

}  // namespace lkcds
