#pragma once

#include <cstddef>
#include <vector>

namespace coxwalls::detail {

using Adjacency = std::vector<std::vector<bool>>;

/// Maximum bipartite matching (Hopcroft-Karp). `edges[i]` lists right
/// vertices adjacent to left vertex i. Returns match_left (-1 if unmatched).
std::vector<int> maximum_matching(const std::vector<std::vector<int>>& edges, std::size_t right_size);

/// Size of a maximum clique, and one such clique (sorted), by Bron-Kerbosch
/// with pivoting.
std::vector<std::size_t> maximum_clique(const Adjacency& adj);

}  // namespace coxwalls::detail
