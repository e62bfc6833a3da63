#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lat34/graph.hpp"
#include "lat34/permutation.hpp"

namespace oracle {

// Number of elements of the group generated by gens, by listing products.
std::size_t closure_size(const std::vector<lat34::Permutation>& gens, int degree);

// Shortest cycle by depth-first search over all simple paths.
std::optional<int> girth_dfs(const lat34::Graph& g);

// Automorphisms found by testing every permutation of the vertex set that
// preserves the sides.
std::uint64_t automorphisms_by_permutations(const lat34::Graph& g);

// Images of point 0 relabelled in breadth-first order over the generators.
std::vector<std::vector<int>> standardized(const std::vector<lat34::Permutation>& gens);

// Regular actions of <x, y | x^3, y^4> on n <= max_degree points, as
// standardized generator images; one per normal subgroup.
std::set<std::vector<std::vector<int>>> regular_pairs_u0(int max_degree);

}  // namespace oracle
