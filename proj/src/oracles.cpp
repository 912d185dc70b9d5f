#include "lkcds/oracles.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "lkcds/domset.hpp"

namespace lkcds {

std::string to_string(SolveResult::Status s) {
  switch (s) {
    case SolveResult::Status::found: return "found";
    case SolveResult::Status::none_within_budget: return "none-within-budget";
    case SolveResult::Status::infeasible: return "infeasible";
    case SolveResult::Status::exhausted: return "budget-exhausted";
  }
  return "?";
}

int capped_value(const SolveResult& result, int k) {
  return result.found() ? std::min(*result.value, k + 1) : k + 1;
}

namespace {

SolveResult from_cover(const CoverSearch::Result& res, const std::vector<Vertex>& ids) {
  SolveResult out;
  out.nodes = res.nodes;
  switch (res.status) {
    case CoverSearch::Status::found: {
      std::vector<Vertex> chosen;
      for (std::size_t i : res.chosen) chosen.push_back(ids[i]);
      out.status = SolveResult::Status::found;
      out.solution = VertexSet(std::move(chosen));
      out.value = static_cast<int>(out.solution->size());
      break;
    }
    case CoverSearch::Status::none_within_cap: out.status = SolveResult::Status::none_within_budget; break;
    case CoverSearch::Status::infeasible: out.status = SolveResult::Status::infeasible; break;
    case CoverSearch::Status::exhausted: out.status = SolveResult::Status::exhausted; break;
  }
  return out;
}

}  // namespace

SolveResult exact_ds_targets(const Graph& g, int r, const VertexSet& targets, int k_cap, SearchBudget budget) {
  if (r < 0) throw DomainError("radius must be >= 0");
  if (k_cap < 0) throw DomainError("cap must be >= 0");
  std::vector<Vertex> index_of(g.order(), -1);
  for (std::size_t i = 0; i < targets.size(); ++i) index_of[static_cast<std::size_t>(targets[i])] = static_cast<Vertex>(i);
  std::vector<Bits> cover;
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    Bits bits(targets.size());
    const auto dist = bfs_layers(g, {v}, r);
    for (Vertex w : dist.reached_set())
      if (index_of[static_cast<std::size_t>(w)] >= 0) bits.set(static_cast<std::size_t>(index_of[static_cast<std::size_t>(w)]));
    cover.push_back(std::move(bits));
    ids.push_back(v);
  }
  CoverSearch search(targets.size(), std::move(cover), std::move(budget));
  return from_cover(search.minimum(static_cast<std::size_t>(k_cap)), ids);
}

SolveResult exact_ds(const Graph& g, int r, int k_cap, SearchBudget budget) {
  return exact_ds_targets(g, r, VertexSet::range(g.order()), k_cap, std::move(budget));
}

namespace {

// Enumerates connected vertex sets (each exactly once, grown from its minimum
// vertex) and keeps the smallest, lexicographically least one dominating Z.
class ConnectedSearch {
 public:
  ConnectedSearch(const Graph& g, const VertexSet& z, int r, std::size_t limit, SearchBudget budget)
      : g_(g), z_(z.members()), r_(r), limit_(limit), budget_(std::move(budget)),
        dist_(g.order(), std::vector<int>(g.order(), kUnreached)), in_sub_(g.order(), 0), zdist_(z.size(), kInf) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) dist_[static_cast<std::size_t>(v)] = bfs_layers(g, {v}, -1).dist;
  }

  void run() {
    for (Vertex v = 0; v < static_cast<Vertex>(g_.order()) && !exhausted_; ++v) {
      std::vector<Vertex> sub{v};
      std::vector<Vertex> ext;
      for (Vertex w : g_.neighbors(v))
        if (w > v) ext.push_back(w);
      in_sub_[static_cast<std::size_t>(v)] = 1;
      auto saved = zdist_;
      add_dist(v);
      extend(sub, ext, v);
      zdist_ = std::move(saved);
      in_sub_[static_cast<std::size_t>(v)] = 0;
    }
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::optional<std::vector<Vertex>>& best() const { return best_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;

  void add_dist(Vertex v) {
    const auto& row = dist_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < z_.size(); ++i) {
      const int d = row[static_cast<std::size_t>(z_[i])];
      if (d != kUnreached) zdist_[i] = std::min(zdist_[i], d);
    }
  }

  std::size_t size_limit() const { return best_ ? best_->size() : limit_; }

  void consider(const std::vector<Vertex>& sub) {
    for (std::size_t i = 0; i < z_.size(); ++i)
      if (zdist_[i] > r_) return;
    std::vector<Vertex> sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    if (!best_ || sorted.size() < best_->size() || (sorted.size() == best_->size() && sorted < *best_)) best_ = sorted;
  }

  void extend(std::vector<Vertex>& sub, std::vector<Vertex> ext, Vertex root) {
    if (++nodes_ > budget_.max_nodes || budget_.stop.stop_requested()) exhausted_ = true;
    if (exhausted_) return;
    consider(sub);
    const std::size_t cap = size_limit();
    if (sub.size() >= cap) return;
    // every vertex added later lies within cap - |sub| of the current set
    const int slack = static_cast<int>(cap - sub.size());
    for (std::size_t i = 0; i < z_.size(); ++i)
      if (zdist_[i] > r_ + slack) return;

    std::sort(ext.begin(), ext.end());
    while (!ext.empty()) {
      const Vertex w = ext.front();
      ext.erase(ext.begin());
      std::vector<Vertex> next_ext = ext;
      for (Vertex u : g_.neighbors(w)) {
        if (u <= root || in_sub_[static_cast<std::size_t>(u)]) continue;
        if (std::find(next_ext.begin(), next_ext.end(), u) != next_ext.end()) continue;
        // exclusive neighbours only: u must not already neighbour the subgraph
        bool adjacent = false;
        for (Vertex s : sub)
          if (g_.has_edge(s, u)) {
            adjacent = true;
            break;
          }
        if (!adjacent) next_ext.push_back(u);
      }
      sub.push_back(w);
      in_sub_[static_cast<std::size_t>(w)] = 1;
      auto saved = zdist_;
      add_dist(w);
      extend(sub, std::move(next_ext), root);
      zdist_ = std::move(saved);
      in_sub_[static_cast<std::size_t>(w)] = 0;
      sub.pop_back();
      if (exhausted_ || sub.size() >= size_limit()) return;
    }
  }

  const Graph& g_;
  std::vector<Vertex> z_;
  int r_;
  std::size_t limit_;
  SearchBudget budget_;
  std::vector<std::vector<int>> dist_;
  std::vector<char> in_sub_;
  std::vector<int> zdist_;
  std::optional<std::vector<Vertex>> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SolveResult exact_acds(const Graph& g, const VertexSet& z, int r, int k_cap, SearchBudget budget) {
  if (r < 0) throw DomainError("radius must be >= 0");
  if (k_cap < 0) throw DomainError("cap must be >= 0");
  SolveResult out;
  if (z.empty()) {
    out.status = SolveResult::Status::found;
    out.solution = VertexSet{};
    out.value = 0;
    return out;
  }
  // a connected D lives in one component, so Z must too
  const auto comp = components(g);
  for (Vertex v : z)
    if (comp[static_cast<std::size_t>(v)] != comp[static_cast<std::size_t>(z.front())]) return out;

  ConnectedSearch search(g, z, r, static_cast<std::size_t>(k_cap), std::move(budget));
  search.run();
  out.nodes = search.nodes();
  if (search.exhausted()) {
    out.status = SolveResult::Status::exhausted;
  } else if (search.best()) {
    out.status = SolveResult::Status::found;
    out.solution = VertexSet::from_sorted(*search.best());
    out.value = static_cast<int>(out.solution->size());
  } else {
    out.status = SolveResult::Status::none_within_budget;
  }
  return out;
}

SolveResult exact_cds(const Graph& g, int r, int k_cap, SearchBudget budget) {
  if (!is_connected(g)) throw DomainError("connected domination needs a connected graph");
  if (g.order() == 0) return exact_acds(g, {}, r, k_cap, std::move(budget));
  int limit = k_cap;
  if (r >= 1) {
    // greedy domination plus connectors bounds the search depth from above
    const auto seed = greedy_rdom(g, r, VertexSet::range(g.order()));
    limit = std::min(limit, static_cast<int>(seed.size() + connect(g, seed, r).size()));
  }
  auto out = exact_acds(g, VertexSet::range(g.order()), r, limit, std::move(budget));
  return out;
}

bool SetCoverInstance::coverable() const {
  std::vector<char> hit(static_cast<std::size_t>(universe_size), 0);
  for (const auto& s : sets)
    for (int e : s) hit[static_cast<std::size_t>(e)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

SetCoverInstance parse_setcover(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  SetCoverInstance inst;
  bool header = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      // a line that is only a comment is skipped; a blank line is an empty set
      if (line.find_first_not_of(" \t") == hash) continue;
      line.erase(hash);
    }
    std::istringstream fields(line);
    if (!header) {
      std::string tag;
      if (!(fields >> tag)) continue;
      long long u = 0, m = 0, k = 0;
      if (tag != "u" || !(fields >> u >> m >> k)) throw ParseError(line_no, "header must be 'u <universe> <sets> <k>'");
      if (u < 0 || m < 0 || k < 0) throw ParseError(line_no, "negative header value");
      inst.universe_size = static_cast<int>(u);
      inst.k = static_cast<int>(k);
      expected = static_cast<std::size_t>(m);
      header = true;
      continue;
    }
    if (inst.sets.size() == expected) {
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "more set lines than declared");
      continue;
    }
    std::vector<int> set;
    std::string tok;
    while (fields >> tok) {
      int e = 0;
      try {
        std::size_t used = 0;
        e = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected an element index, got '" + tok + "'");
      }
      if (e < 0 || e >= inst.universe_size) throw ParseError(line_no, "element " + tok + " outside the universe");
      set.push_back(e);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    inst.sets.push_back(std::move(set));
  }
  if (!header) throw ParseError(line_no, "missing header");
  if (inst.sets.size() != expected)
    throw ParseError(line_no, "declared " + std::to_string(expected) + " sets, found " + std::to_string(inst.sets.size()));
  return inst;
}

std::string serialize_setcover(const SetCoverInstance& inst) {
  std::ostringstream out;
  out << "u " << inst.universe_size << ' ' << inst.sets.size() << ' ' << inst.k << '\n';
  for (const auto& s : inst.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

SetCoverInstance read_setcover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_setcover(buffer.str());
}

SolveResult exact_setcover(const SetCoverInstance& inst, SearchBudget budget) {
  std::vector<Bits> cover;
  std::vector<Vertex> ids;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    Bits bits(static_cast<std::size_t>(inst.universe_size));
    for (int e : inst.sets[i]) bits.set(static_cast<std::size_t>(e));
    cover.push_back(std::move(bits));
    ids.push_back(static_cast<Vertex>(i));
  }
  CoverSearch search(static_cast<std::size_t>(inst.universe_size), std::move(cover), std::move(budget));
  return from_cover(search.minimum(static_cast<std::size_t>(std::max(inst.k, 0))), ids);
}

}  // namespace lkcds
