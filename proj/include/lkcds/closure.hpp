#pragma once

#include <map>
#include <string>
#include <vector>

#include "lkcds/graph.hpp"
#include "lkcds/projections.hpp"
#include "lkcds/rational.hpp"
#include "lkcds/steiner.hpp"

namespace lkcds {

using ClassSubset = std::vector<int>;  // ascending class indices

struct ClosureStats {
  std::size_t x_size = 0;
  std::size_t classes = 0;
  std::size_t enumerated = 0;
  std::size_t kept = 0;
  std::size_t gprime_order = 0;
  std::size_t gprime_edges = 0;
};

/// A profile-preserving subgraph of g around X.
///
/// Vertex ids of gprime are the included host vertices in increasing order.
/// Trees and terminals are in host ids.
struct ClosureResult {
  Graph gprime;
  SubgraphWitness witness;
  VertexSet x;  // gprime ids
  ProfileClassification classes;
  std::map<ClassSubset, SteinerTree> kept_trees;
  VertexSet terminals;
  Rational t;
  int cap = 0;  // floor(2t)
  int r = 0;
  ClosureStats stats;
};

/// For every set of at most floor(2t) classes whose group Steiner tree has at
/// most floor(2t) vertices, keeps one minimum tree; then adds, for each touched
/// terminal, shortest X-avoiding paths to its r-projection. Edges: tree edges,
/// path edges and g-edges inside X. Throws DomainError if floor(2t) < 1 or X is empty.
ClosureResult build_closure(const Graph& g, const VertexSet& x, int r, const Rational& t);

struct ClosureReport {
  bool x_included = true;            // item 1
  bool profiles_surjective = true;   // item 2
  bool steiner_preserved = true;     // item 3
  bool terminal_profiles_exact = true;
  std::size_t subsets_checked = 0;
  std::size_t gprime_order = 0;      // item 4, reported only
  std::vector<std::string> failures;

  bool ok() const { return x_included && profiles_surjective && steiner_preserved && terminal_profiles_exact; }
};

/// Re-derives everything from g: enumerates all class subsets independently of
/// the kept list and compares Steiner values on both graphs.
ClosureReport verify_closure(const Graph& g, const VertexSet& x, int r, const Rational& t, const Graph& gprime,
                             const SubgraphWitness& witness, const VertexSet& terminals = {});
ClosureReport verify_closure(const Graph& g, const VertexSet& x, const ClosureResult& result);

/// gprime plus, per class with terminals, a copy of the avoiding shortest-path
/// tree from x_k to those terminals with each edge subdivided 2r times and
/// leaves glued to the terminals. gprime keeps its ids as a prefix.
struct AnalysisGraph {
  Graph gdot;
  std::map<int, Vertex> roots;   // class -> v_k
  std::map<int, int> depths;     // class -> d_k = (2r+1) * avoiding distance
  std::map<int, Vertex> anchor;  // class -> x_k (host id)
  std::map<int, std::vector<Edge>> trees;  // class -> T_k (host ids)
  std::map<Vertex, std::vector<Vertex>> leaf_paths;  // terminal (host id) -> gdot path to its root
};

/// Throws DomainError if a class with terminals has an empty projection.
AnalysisGraph build_analysis_graph(const Graph& g, const ClosureResult& result);

struct TranslationCheck {
  bool holds = true;
  bool forward_ok = true;  // the kept tree plus root paths is a tree of size s + sum d_k
  int s = 0;               // group Steiner value in g
  int depth_sum = 0;
  int gdot_value = 0;      // minimum tree in gdot over the roots
};

/// Compares s + sum d_k with the minimum tree in gdot containing the roots of
/// `subset`. A lone root is trivially its own tree, so for one class the tree
/// must also reach a terminal of that class.

TranslationCheck check_translation(const Graph& g, const ClosureResult& result, const AnalysisGraph& analysis,
                                   const ClassSubset& subset);

}  // namespace lkcds
