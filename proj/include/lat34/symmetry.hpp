#pragma once

#include <string>
#include <vector>

#include "lat34/graph.hpp"
#include "lat34/perm_group.hpp"

namespace lat34 {

struct CanonicalForm {
  // Identical for isomorphic graphs (with the same side sizes) and distinct
  // otherwise.
  std::string bytes;
  // labeling[v] is the canonical label of vertex v.
  std::vector<int> labeling;
  // Generators of the automorphism group (vertex permutations).
  std::vector<Permutation> generators;
  std::uint64_t leaves = 0;
};

// Individualization-refinement search. The seed colouring is (side, valence),
// the target cell the first smallest non-singleton cell.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

PermGroup automorphism_group(const Graph& g);
bool is_automorphism(const Graph& g, const Permutation& p);

struct SymmetryReport {
  BigInt aut_order;
  int v = -1, u = -1;  // representative edge, val(v) = 3, val(u) = 4
  std::string local_action_v3, local_action_v4;
  BigInt vertex_kernel_v, vertex_kernel_u;
  int s_v = 0, s_u = 0;
  BigInt edge_stab_order;
  BigInt edge_kernel_order;
  bool locally_arc_transitive = false;
  bool edge_transitive = false;
};

inline constexpr int kMaxArcLength = 16;

// Parameters of the full automorphism group. Throws NotBiregular.
SymmetryReport symmetry_report(const Graph& g);
SymmetryReport symmetry_report(const Graph& g, const PermGroup& aut);

// Largest s <= kMaxArcLength such that the stabiliser of v in `group` is
// transitive on the s-arcs starting at v. Throws Error past the cap.
int arc_transitivity(const Graph& g, const PermGroup& group, int v);

// "2^2*3" style factorisation; "1" for one.
std::string factored(const BigInt& n);

}  // namespace lat34
