#include "lkcds/cover_search.hpp"

#include <algorithm>

namespace lkcds {

CoverSearch::CoverSearch(std::size_t num_targets, std::vector<Bits> candidates, SearchBudget budget)
    : num_targets_(num_targets), candidates_(std::move(candidates)), covering_(num_targets), budget_(std::move(budget)) {
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    candidates_[i].resize(num_targets_);
    for (auto t = candidates_[i].find_first(); t != Bits::npos; t = candidates_[i].find_next(t)) covering_[t].push_back(i);
  }
}

bool CoverSearch::tick() {
  if (++nodes_ > budget_.max_nodes || budget_.stop.stop_requested()) exhausted_ = true;
  return !exhausted_;
}

// Is there a cover of `uncovered` using at most `budget` candidates, all with
// index >= min_index? Appends the picks on success.
bool CoverSearch::search(Bits& uncovered, std::size_t budget, std::size_t min_index, std::vector<std::size_t>& picked) {
  if (!tick()) return false;
  const auto target = uncovered.find_first();
  if (target == Bits::npos) return true;
  if (budget == 0) return false;

  // lower bound: no candidate covers more than `widest` of what is left
  std::size_t widest = 0;
  for (std::size_t i = min_index; i < candidates_.size(); ++i) widest = std::max(widest, (candidates_[i] & uncovered).count());
  if (widest == 0 || uncovered.count() > widest * budget) return false;

  for (std::size_t c : covering_[target]) {
    if (c < min_index) continue;
    Bits next = uncovered - candidates_[c];
    picked.push_back(c);
    if (search(next, budget - 1, min_index, picked)) return true;
    picked.pop_back();
    if (exhausted_) return false;
  }
  return false;
}

CoverSearch::Result CoverSearch::any(std::size_t cap) {
  Result out;
  Bits all(num_targets_);
  all.set();
  for (std::size_t t = 0; t < num_targets_; ++t)
    if (covering_[t].empty()) {
      out.status = Status::infeasible;
      return out;
    }
  std::vector<std::size_t> picked;
  const bool ok = search(all, cap, 0, picked);
  out.nodes = nodes_;
  if (exhausted_) {
    out.status = Status::exhausted;
  } else if (ok) {
    std::sort(picked.begin(), picked.end());
    out.status = Status::found;
    out.chosen = std::move(picked);
  } else {
    out.status = Status::none_within_cap;
  }
  return out;
}

CoverSearch::Result CoverSearch::minimum(std::size_t cap) {
  Result out;
  for (std::size_t t = 0; t < num_targets_; ++t)
    if (covering_[t].empty()) {
      out.status = Status::infeasible;
      return out;
    }
  // smallest feasible size by iterative deepening
  std::size_t size = 0;
  bool found = false;
  for (; size <= cap; ++size) {
    Bits all(num_targets_);
    all.set();
    std::vector<std::size_t> scratch;
    found = search(all, size, 0, scratch);
    if (exhausted_ || found) break;
  }
  out.nodes = nodes_;
  if (exhausted_) {
    out.status = Status::exhausted;
    return out;
  }
  if (!found) {
    out.status = Status::none_within_cap;
    return out;
  }
  // lexicographically least cover of that size: fix the smallest feasible
  // next index one position at a time
  Bits uncovered(num_targets_);
  uncovered.set();
  std::size_t next_index = 0;
  for (std::size_t slot = 0; slot < size && uncovered.any(); ++slot) {
    bool placed = false;
    for (std::size_t c = next_index; c < candidates_.size(); ++c) {
      Bits rest = uncovered - candidates_[c];
      std::vector<std::size_t> scratch;
      if (search(rest, size - slot - 1, c + 1, scratch)) {
        out.chosen.push_back(c);
        uncovered = rest;
        next_index = c + 1;
        placed = true;
        break;
      }
      if (exhausted_) break;
    }
    if (exhausted_) {
      out.status = Status::exhausted;
      out.chosen.clear();
      out.nodes = nodes_;
      return out;
    }
    if (!placed) throw std::logic_error("cover refinement lost feasibility");
  }
  out.nodes = nodes_;
  out.status = Status::found;
  return out;
}

}  // namespace lkcds
