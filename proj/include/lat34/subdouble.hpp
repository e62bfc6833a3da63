#pragma once

#include <string>
#include <variant>

#include "lat34/graph.hpp"
#include "lat34/perm_group.hpp"

namespace lat34 {

// Vertices 0..n-1 are the vertices of `lambda`, n.. its edges in sorted
// order; every edge vertex is joined to both endpoints.
Graph subdivision(const Graph& lambda);

// Vertices (i, v) are numbered i*n + v (valence 3), edge e of `lambda` is
// 2n + e (valence 4). Throws NotCubic.
Graph subdivided_double(const Graph& lambda);

struct RecognizedK34 {};
struct RecognizedDouble {
  Graph lambda;
};
struct NotUnworthy {};
struct Malformed {
  std::string reason;
};
using RecognitionResult = std::variant<RecognizedK34, RecognizedDouble, NotUnworthy, Malformed>;

// Decides whether an unworthy graph of valence {3,4} is K_{3,4} or a
// subdivided double, and in the latter case recovers the cubic graph.
RecognitionResult recognize_unworthy(const Graph& g);
std::string describe(const RecognitionResult& r);

struct DoubleKernels {
  int n = 0;                // vertices of lambda
  BigInt constructed;       // edge kernel in <flips, Aut(lambda)>
  BigInt full;              // edge kernel in Aut of the double
  bool constructed_divisible = false;  // 2^(n-2) divides `constructed`
  bool full_divisible = false;
};

// Edge kernels of the double of a connected cubic graph at the edge
// ((0, 0), first edge at 0). Throws NotCubic.
DoubleKernels double_kernels(const Graph& lambda);
// 2^(n-2) divides the edge kernel of the group generated by the vertex
// flips and the lifted automorphisms of lambda.
bool kernel_divisibility_check(const Graph& lambda);

// Flip generators and lifted automorphisms of lambda acting on the double.
std::vector<Permutation> flip_generators(const Graph& lambda);
std::vector<Permutation> lifted_automorphisms(const Graph& lambda, const std::vector<Permutation>& aut);

}  // namespace lat34
