#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lkcds/cover_search.hpp"
#include "lkcds/graph.hpp"

namespace lkcds {

/// Outcome of an exact search. `exhausted` means the node budget ran out or
/// the search was cancelled; nothing is known about the optimum then.
struct SolveResult {
  enum class Status { found, none_within_budget, infeasible, exhausted };

  Status status = Status::infeasible;
  std::optional<VertexSet> solution;  // vertex ids, or set indices for set cover
  std::optional<int> value;
  std::uint64_t nodes = 0;

  bool found() const { return status == Status::found; }
};

std::string to_string(SolveResult::Status s);

/// min{|D|, k+1}: the parameterized objective of a found solution, k+1 otherwise.
int capped_value(const SolveResult& result, int k);

/// Minimum r-dominating set of `targets` (all vertices if omitted) of size <= k_cap,
/// lexicographically least among minimum ones.
SolveResult exact_ds(const Graph& g, int r, int k_cap, SearchBudget budget = {});
SolveResult exact_ds_targets(const Graph& g, int r, const VertexSet& targets, int k_cap, SearchBudget budget = {});

/// Minimum connected r-dominating set within k_cap. Throws DomainError if g is disconnected.
SolveResult exact_cds(const Graph& g, int r, int k_cap, SearchBudget budget = {});
/// Minimum D, connected in g, r-dominating Z. Z empty gives the empty solution.
SolveResult exact_acds(const Graph& g, const VertexSet& z, int r, int k_cap, SearchBudget budget = {});

struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;

  bool coverable() const;
};

SetCoverInstance parse_setcover(std::string_view text);
std::string serialize_setcover(const SetCoverInstance& inst);
SetCoverInstance read_setcover_file(const std::string& path);

/// Minimum subfamily of size <= inst.k covering the universe; the solution holds set indices.
SolveResult exact_setcover(const SetCoverInstance& inst, SearchBudget budget = {});

}  // namespace lkcds
