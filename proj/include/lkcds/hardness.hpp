#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lkcds/graph.hpp"
#include "lkcds/oracles.hpp"

namespace lkcds {

enum class Role { set_vertex, element_vertex, gadget, subdivision };

std::string to_string(Role role);

/// r-subdivided incidence graph of a set system with a guard gadget.
///
/// Pre-subdivision ids: sets 0..m-1, elements m..m+u-1, guard m+u, pendant
/// m+u+1. The guard sees every set vertex and the pendant; the pendant forces
/// a dominator at the guard, which costs one extra unit: k_out = k + 1.
struct HardnessInstance {
  SetCoverInstance source;
  int r = 1;
  Graph pre_graph;
  Graph g;
  int k_out = 0;
  int offset = 1;
  std::vector<Role> roles;
};

/// Throws DomainError if the family is empty or does not cover the universe.
HardnessInstance generate(const SetCoverInstance& inst, int r);

/// Random coverable set systems with (universe, sets) from `sizes`; k is half
/// the number of sets, rounded up.
std::vector<HardnessInstance> family_sweep(const std::vector<std::pair<int, int>>& sizes, int r, std::uint64_t seed);

/// Uniform random coverable instance.
SetCoverInstance random_setcover(int universe, int num_sets, int k, std::uint64_t seed);

std::string serialize_roles(const HardnessInstance& h);

}  // namespace lkcds
