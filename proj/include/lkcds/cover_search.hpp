#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace lkcds {

/// Node limit plus cooperative cancellation for exponential searches.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::stop_token stop;
};

using Bits = boost::dynamic_bitset<>;

/// Minimum set cover by branching on the lowest uncovered target.
/// Candidate i covers the targets set in candidates[i].
class CoverSearch {
 public:
  enum class Status { found, none_within_cap, infeasible, exhausted };

  struct Result {
    Status status = Status::infeasible;
    std::vector<std::size_t> chosen;  // ascending candidate indices, lexicographically least
    std::uint64_t nodes = 0;
  };

  CoverSearch(std::size_t num_targets, std::vector<Bits> candidates, SearchBudget budget = {});

  /// Smallest cover of size <= cap, lexicographically least among those.
  Result minimum(std::size_t cap);
  /// Any cover of size <= cap; cheaper than minimum().
  Result any(std::size_t cap);

 private:
  bool search(Bits& uncovered, std::size_t budget, std::size_t min_index, std::vector<std::size_t>& picked);
  bool tick();

  std::size_t num_targets_;
  std::vector<Bits> candidates_;
  std::vector<std::vector<std::size_t>> covering_;  // target -> candidates covering it, ascending
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace lkcds
