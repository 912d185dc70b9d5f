#include "lkcds/hardness.hpp"

#include <random>
#include <sstream>

namespace lkcds {

std::string to_string(Role role) {
  switch (role) {
    case Role::set_vertex: return "set";
    case Role::element_vertex: return "element";
    case Role::gadget: return "gadget";
    case Role::subdivision: return "subdivision";
  }
  return "?";
}

HardnessInstance generate(const SetCoverInstance& inst, int r) {
  if (r < 1) throw DomainError("subdivision length must be >= 1");
  if (inst.sets.empty()) throw DomainError("set family is empty");
  if (!inst.coverable()) throw DomainError("the sets do not cover the universe");
  const int m = static_cast<int>(inst.sets.size());
  const int u = inst.universe_size;
  const Vertex guard = m + u, pendant = m + u + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int e : inst.sets[static_cast<std::size_t>(i)]) edges.push_back({i, m + e});
    edges.push_back({i, guard});
  }
  edges.push_back({guard, pendant});

  HardnessInstance h;
  h.source = inst;
  h.r = r;
  h.pre_graph = Graph::from_edges(static_cast<std::size_t>(m + u + 2), edges);
  h.g = r_subdivision(h.pre_graph, r);
  h.offset = 1;
  h.k_out = inst.k + h.offset;
  h.roles.assign(h.g.order(), Role::subdivision);
  for (int i = 0; i < m; ++i) h.roles[static_cast<std::size_t>(i)] = Role::set_vertex;
  for (int e = 0; e < u; ++e) h.roles[static_cast<std::size_t>(m + e)] = Role::element_vertex;
  h.roles[static_cast<std::size_t>(guard)] = Role::gadget;
  h.roles[static_cast<std::size_t>(pendant)] = Role::gadget;
  return h;
}

SetCoverInstance random_setcover(int universe, int num_sets, int k, std::uint64_t seed) {
  if (universe < 1 || num_sets < 1) throw DomainError("set cover sizes must be positive");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<int> pick(0, num_sets - 1);
  std::vector<std::vector<char>> member(static_cast<std::size_t>(num_sets), std::vector<char>(static_cast<std::size_t>(universe), 0));
  for (auto& row : member)
    for (auto& cell : row) cell = coin(rng);
  for (int e = 0; e < universe; ++e) {
    bool hit = false;
    for (const auto& row : member) hit = hit || row[static_cast<std::size_t>(e)];
    if (!hit) member[static_cast<std::size_t>(pick(rng))][static_cast<std::size_t>(e)] = 1;
  }
  std::uniform_int_distribution<int> element(0, universe - 1);
  SetCoverInstance inst;
  inst.universe_size = universe;
  inst.k = k;
  for (auto& row : member) {
    std::vector<int> set;
    for (int e = 0; e < universe; ++e)
      if (row[static_cast<std::size_t>(e)]) set.push_back(e);
    if (set.empty()) set.push_back(element(rng));
    inst.sets.push_back(std::move(set));
  }
  return inst;
}

std::vector<HardnessInstance> family_sweep(const std::vector<std::pair<int, int>>& sizes, int r, std::uint64_t seed) {
  std::vector<HardnessInstance> out;
  std::mt19937_64 seeds(seed);
  for (auto [universe, num_sets] : sizes)
    out.push_back(generate(random_setcover(universe, num_sets, (num_sets + 1) / 2, seeds()), r));
  return out;
}

std::string serialize_roles(const HardnessInstance& h) {
  std::ostringstream out;
  out << "# vertex role\n";
  for (std::size_t v = 0; v < h.roles.size(); ++v) out << v << ' ' << to_string(h.roles[v]) << '\n';
  return out.str();
}

}  // namespace lkcds
