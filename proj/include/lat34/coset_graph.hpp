#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lat34/amalgams.hpp"
#include "lat34/graph.hpp"
#include "lat34/lins.hpp"

namespace lat34 {

enum class RejectReason { LNotEmbedded, RNotEmbedded, BadIntersection, StabilizerTooLarge, Degenerate };

std::string to_string(RejectReason r);

struct Rejected {
  RejectReason reason;
};

// A coset graph together with the action of the quotient on it: one vertex
// permutation per universal generator.
struct CosetGraph {
  Graph graph;
  std::vector<Permutation> action;
};

// Cos(G, im L, im R) for a quotient G of the amalgam's universal group,
// given by its regular action. Valence-3 vertices are the right cosets of
// im L, valence-4 vertices those of im R, each side ordered by the smallest
// element (point) it contains; two cosets are adjacent when they meet.
std::variant<CosetGraph, Rejected> coset_graph_with_action(const QuotientRecord& q, const Amalgam& a);
std::variant<Graph, Rejected> coset_graph(const QuotientRecord& q, const Amalgam& a);

// The same graph from a transitive action of the universal group in which
// im L fixes point 0: the points are the cosets of im L, the valence-4
// vertices the images of the orbit of 0 under im R. Rejected unless the
// point stabiliser is exactly im L, L and R embed and 0 has 4 images under
// im R. Neighbourhoods of valence-4 vertices must be distinct, so K_{3,4}
// (the only exception) is reported as Degenerate.
std::variant<CosetGraph, Rejected> action_coset_graph(const QuotientRecord& action, const Amalgam& a);

// The action is by automorphisms, transitive on each side, locally
// arc-transitive, of order |G|, and with trivial edge kernel.
bool verify_action(const CosetGraph& cg, const BigInt& group_order);

}  // namespace lat34
