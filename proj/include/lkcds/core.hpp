#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "lkcds/cover_search.hpp"
#include "lkcds/graph.hpp"

namespace lkcds {

enum class Certification { exhaustive, heuristic_sound, trivial };
enum class CoreMode { exact, heuristic, trivial };

std::string to_string(Certification c);
std::string to_string(CoreMode m);
CoreMode parse_core_mode(std::string_view name);

/// Z such that every set of at most k vertices r-dominating Z r-dominates G.
struct DominationCore {
  VertexSet z;
  int k = 0;
  int r = 0;
  Certification certified = Certification::trivial;
};

/// The instance has no r-dominating set of size at most k.
struct Reject {
  std::string reason;
};

using CoreOutcome = std::variant<DominationCore, Reject>;

/// trivial: Z = V(g). heuristic: drops z while another z' in Z has
/// N_r[z'] inside N_r[z]. exact: first rejects when no k-dominating set exists,
/// then applies the heuristic rule and drops z whenever no set of size <= k
/// avoiding N_r[z] dominates Z - z. Removals run in descending id order until
/// nothing changes. Throws BudgetError if a search runs out of budget.
CoreOutcome find_core(const Graph& g, int k, int r, CoreMode mode, SearchBudget budget = {});

/// Rejects if some vertex is farther than 2r from Z; otherwise adds connectors.
CoreOutcome connected_core(const Graph& g, const DominationCore& core);

/// Direct check of the core property. Throws BudgetError when the search runs out.
bool core_verify(const Graph& g, const VertexSet& z, int k, int r, SearchBudget budget = {});

}  // namespace lkcds
