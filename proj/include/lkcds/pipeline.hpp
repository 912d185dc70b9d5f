#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lkcds/closure.hpp"
#include "lkcds/core.hpp"
#include "lkcds/cover_search.hpp"
#include "lkcds/graph.hpp"
#include "lkcds/rational.hpp"

namespace lkcds {

struct KernelParams {
  int k = 1;
  int r = 1;
  Rational alpha{2};
  Rational epsilon{1, 2};
  Rational t;      // (alpha - 1) / (4r + 2)
  Rational t_eff;  // max(1, t)

  /// Throws DomainError unless k >= 1, r >= 1, alpha > 1, epsilon > 0.
  static KernelParams make(int k, int r, Rational alpha, Rational epsilon = Rational(1, 2));
  /// 1 + (4r+2)/t_eff, never above alpha.
  Rational ratio_bound() const;
};

enum class KernelProblem { acds, ads };

using Fields = std::vector<std::pair<std::string, std::string>>;

/// Reduced instance. Z and gprime use local ids; vertex_map sends them to the original graph.
struct KernelInstance {
  KernelProblem problem = KernelProblem::acds;
  Graph gprime;
  VertexSet z;
  int k = 0;
  int r = 0;
  std::vector<Vertex> vertex_map;
  Fields params;
  Fields provenance;
  /// Set when the instance came from the small-optimum shortcut: an optimal
  /// solution in original ids, returned by lift.
  std::optional<VertexSet> exact_solution;

  SubgraphWitness witness() const { return {vertex_map}; }
};

using KernelOutcome = std::variant<KernelInstance, Reject>;

/// core -> connected core -> closure around it. If a connected solution
/// smaller than ceil(t_eff) exists it is found by search and packaged as a
/// trivial instance instead. Throws DomainError if g is disconnected.
KernelOutcome pre_kernel(const Graph& g, const KernelParams& params, CoreMode mode, SearchBudget budget = {});

/// D is connected in gprime and r-dominates Z there.
bool valid_kernel_solution(const KernelInstance& inst, const VertexSet& d);

/// Image of D in original ids. Throws ContractError if D is not a valid
/// solution of the instance, or if a solution of size <= k maps to something
/// that is not a connected r-dominating set of the original graph.
VertexSet lift(const Graph& original, const KernelInstance& inst, const VertexSet& d);

struct RatioCertificate {
  int lifted_value = 0;  // capped at k+1
  int kernel_value = 0;  // capped at k+1
  std::optional<int> original_opt;
  std::optional<int> kernel_opt;
  Rational alpha;
  bool solution_valid = false;
  std::optional<bool> ratio_ok;     // lifted/opt <= alpha * kernel/kernel_opt
  std::optional<bool> opt_bound_ok; // kernel_opt <= alpha * original_opt
};

RatioCertificate ratio_check(const Graph& original, const KernelInstance& inst, const VertexSet& d,
                             const KernelParams& params, SearchBudget budget = {});

/// Annotated r-domination kernel: Z is the connected core, plus one
/// representative per profile class over Z with its avoiding paths to Z.
KernelOutcome ds_kernel(const Graph& g, int k, int r, CoreMode mode = CoreMode::exact, SearchBudget budget = {});
/// Image of a set dominating Z in the ds kernel. Throws ContractError when D
/// does not dominate Z, or when |D| <= k and the image misses a vertex.
VertexSet lift_ds(const Graph& original, const KernelInstance& inst, const VertexSet& d);

std::string to_string(KernelProblem p);

}  // namespace lkcds
