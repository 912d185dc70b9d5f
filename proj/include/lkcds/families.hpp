#pragma once

#include <cstdint>

#include "lkcds/graph.hpp"

namespace lkcds::families {

/// P_n on 0..n-1 in path order.
Graph path(std::size_t n);
/// C_n on 0..n-1 in cyclic order (n >= 3).
Graph cycle(std::size_t n);
/// K_{1,leaves}: centre 0, leaves 1..leaves.
Graph star(std::size_t leaves);
Graph complete(std::size_t n);
/// rows x cols grid, vertex (i,j) has id i*cols + j.
Graph grid(std::size_t rows, std::size_t cols);
/// Uniform random recursive tree on n vertices plus `chords` extra random edges.
Graph random_tree_with_chords(std::size_t n, std::size_t chords, std::uint64_t seed);
/// Connected G(n,p)-style graph: random spanning tree plus each other pair with probability p.
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

}  // namespace lkcds::families
