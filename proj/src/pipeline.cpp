#include "lkcds/pipeline.hpp"

#include <set>

#include "lkcds/domset.hpp"
#include "lkcds/oracles.hpp"

namespace lkcds {

KernelParams KernelParams::make(int k, int r, Rational alpha, Rational epsilon) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (r < 1) throw DomainError("r must be >= 1");
  if (alpha <= 1) throw DomainError("alpha must exceed 1");
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  KernelParams p;
  p.k = k;
  p.r = r;
  p.alpha = alpha;
  p.epsilon = epsilon;
  p.t = (alpha - 1) / (4 * r + 2);
  p.t_eff = std::max(Rational(1), p.t);
  return p;
}

Rational KernelParams::ratio_bound() const { return 1 + Rational(4 * r + 2) / t_eff; }

std::string to_string(KernelProblem p) { return p == KernelProblem::acds ? "acds" : "ads"; }

namespace {

Fields params_fields(const KernelParams& p) {
  return {{"k", std::to_string(p.k)},         {"r", std::to_string(p.r)},
          {"alpha", to_string(p.alpha)},      {"epsilon", to_string(p.epsilon)},
          {"t", to_string(p.t)},              {"t_eff", to_string(p.t_eff)}};
}

SolveResult checked(SolveResult res) {
  if (res.status == SolveResult::Status::exhausted) throw BudgetError("exact search exceeded its node budget");
  return res;
}

DominationCore connected_core_or_reject(const Graph& g, int k, int r, CoreMode mode, const SearchBudget& budget,
                                        std::optional<Reject>& reject) {
  auto core = find_core(g, k, r, mode, budget);
  if (auto* rej = std::get_if<Reject>(&core)) {
    reject = *rej;
    return {};
  }
  auto connected = connected_core(g, std::get<DominationCore>(core));
  if (auto* rej = std::get_if<Reject>(&connected)) {
    reject = *rej;
    return {};
  }
  return std::get<DominationCore>(connected);
}

}  // namespace

KernelOutcome pre_kernel(const Graph& g, const KernelParams& params, CoreMode mode, SearchBudget budget) {
  if (g.order() == 0 || !is_connected(g)) throw DomainError("kernelization needs a connected nonempty graph");
  const int r = params.r;

  const auto shortcut_cap = static_cast<int>(ceil_of(params.t_eff)) - 1;
  if (shortcut_cap >= 1) {
    const auto small = checked(exact_cds(g, r, shortcut_cap, budget));
    if (small.found()) {
      const VertexSet& d = *small.solution;
      auto sub = induced_subgraph(g, d);
      KernelInstance inst;
      inst.problem = KernelProblem::acds;
      inst.gprime = std::move(sub.graph);
      inst.z = VertexSet::range(d.size());
      inst.k = params.k;
      inst.r = r;
      inst.vertex_map = d.members();
      inst.params = params_fields(params);
      inst.provenance = {{"route", "exact-shortcut"}, {"optimum", std::to_string(d.size())}};
      inst.exact_solution = d;
      return inst;
    }
  }

  std::optional<Reject> reject;
  const auto core = connected_core_or_reject(g, params.k, r, mode, budget, reject);
  if (reject) return *reject;

  auto closure = build_closure(g, core.z, r, params.t_eff);
  KernelInstance inst;
  inst.problem = KernelProblem::acds;
  inst.z = closure.x;
  inst.k = params.k;
  inst.r = r;
  inst.vertex_map = closure.witness.vertex_map;
  inst.gprime = std::move(closure.gprime);
  inst.params = params_fields(params);
  inst.provenance = {{"route", "closure"},
                     {"core_mode", to_string(mode)},
                     {"core_certification", to_string(core.certified)},
                     {"core_size", std::to_string(core.z.size())},
                     {"classes", std::to_string(closure.stats.classes)},
                     {"subsets_enumerated", std::to_string(closure.stats.enumerated)},
                     {"subsets_kept", std::to_string(closure.stats.kept)},
                     {"steiner_cap", std::to_string(closure.cap)},
                     {"edges", "certified-only"},
                     {"original_order", std::to_string(g.order())}};
  return inst;
}

bool valid_kernel_solution(const KernelInstance& inst, const VertexSet& d) {
  for (Vertex v : d)
    if (!inst.gprime.valid(v)) return false;
  if (inst.z.empty()) return true;
  return !d.empty() && induces_connected(inst.gprime, d) && dominates(inst.gprime, d, inst.r, inst.z);
}

VertexSet lift(const Graph& original, const KernelInstance& inst, const VertexSet& d) {
  if (!valid_kernel_solution(inst, d)) throw ContractError("refusing to lift an invalid kernel solution");
  if (inst.exact_solution) return *inst.exact_solution;
  const VertexSet image = inst.witness().to_host(d);
  if (is_connected_dominating(original, image, inst.r)) return image;
  if (static_cast<int>(d.size()) <= inst.k)
    throw ContractError("lifted solution of size <= k does not dominate the original graph");
  // oversized solutions carry objective k+1 either way; the whole graph is a valid stand-in
  return VertexSet::range(original.order());
}

RatioCertificate ratio_check(const Graph& original, const KernelInstance& inst, const VertexSet& d,
                             const KernelParams& params, SearchBudget budget) {
  RatioCertificate cert;
  const int k = inst.k;
  cert.alpha = params.alpha;
  cert.solution_valid = valid_kernel_solution(inst, d);
  const auto orig = exact_cds(original, inst.r, k, budget);
  const auto kern = exact_acds(inst.gprime, inst.z, inst.r, k, budget);
  if (orig.status != SolveResult::Status::exhausted) cert.original_opt = capped_value(orig, k);
  if (kern.status != SolveResult::Status::exhausted) cert.kernel_opt = capped_value(kern, k);
  if (cert.original_opt && cert.kernel_opt)
    cert.opt_bound_ok = Rational(*cert.kernel_opt) <= params.alpha * *cert.original_opt;
  if (!cert.solution_valid) {
    // an invalid kernel solution has infinite cost, so the inequality holds vacuously
    cert.kernel_value = k + 1;
    cert.ratio_ok = true;
    return cert;
  }
  cert.kernel_value = std::min<int>(static_cast<int>(d.size()), k + 1);
  cert.lifted_value = std::min<int>(static_cast<int>(lift(original, inst, d).size()), k + 1);
  if (cert.original_opt && cert.kernel_opt)
    cert.ratio_ok = Rational(cert.lifted_value) * *cert.kernel_opt <=
                    params.alpha * cert.kernel_value * *cert.original_opt;
  return cert;
}

KernelOutcome ds_kernel(const Graph& g, int k, int r, CoreMode mode, SearchBudget budget) {
  if (g.order() == 0 || !is_connected(g)) throw DomainError("kernelization needs a connected nonempty graph");
  std::optional<Reject> reject;
  const auto core = connected_core_or_reject(g, k, r, mode, budget, reject);
  if (reject) return *reject;

  const auto pc = classify(g, core.z, r);
  std::set<Vertex> verts(core.z.begin(), core.z.end());
  std::set<Edge> edges;
  for (Vertex rep : pc.representatives) {
    verts.insert(rep);
    const auto tree = bfs_tree(g, {rep}, r, core.z);
    for (Vertex a : core.z) {
      if (!tree.dist.reached(a)) continue;
      const auto path = tree.path_to_root(a);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        verts.insert(path[i + 1]);
        edges.insert(normalized({path[i], path[i + 1]}));
      }
    }
  }
  for (Vertex a : core.z)
    for (Vertex b : g.neighbors(a))
      if (a < b && core.z.contains(b)) edges.insert({a, b});
  const std::vector<Edge> edge_list(edges.begin(), edges.end());
  auto sub = edge_subgraph(g, VertexSet(std::vector<Vertex>(verts.begin(), verts.end())), edge_list);

  KernelInstance inst;
  inst.problem = KernelProblem::ads;
  const auto inverse = sub.witness.from_host(g.order());
  std::vector<Vertex> z;
  for (Vertex v : core.z) z.push_back(inverse[static_cast<std::size_t>(v)]);
  inst.z = VertexSet(std::move(z));
  inst.k = k;
  inst.r = r;
  inst.vertex_map = sub.witness.vertex_map;
  inst.gprime = std::move(sub.graph);
  inst.params = {{"k", std::to_string(k)}, {"r", std::to_string(r)}};
  inst.provenance = {{"route", "projection-classes"},
                     {"core_mode", to_string(mode)},
                     {"core_certification", to_string(core.certified)},
                     {"core_size", std::to_string(core.z.size())},
                     {"classes", std::to_string(pc.num_classes())},
                     {"original_order", std::to_string(g.order())}};
  return inst;
}

VertexSet lift_ds(const Graph& original, const KernelInstance& inst, const VertexSet& d) {
  for (Vertex v : d)
    if (!inst.gprime.valid(v)) throw ContractError("solution vertex outside the kernel");
  if (!dominates(inst.gprime, d, inst.r, inst.z)) throw ContractError("refusing to lift a set that misses Z");
  const VertexSet image = inst.witness().to_host(d);
  if (static_cast<int>(d.size()) <= inst.k && !dominates(original, image, inst.r))
    throw ContractError("lifted solution of size <= k does not dominate the original graph");
  return image;
}

}  // namespace lkcds
