#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lat34 {

// Simple undirected graph whose vertices are split into two index ranges:
// 0..n3-1 (the valence-3 side) and n3..n3+n4-1 (the valence-4 side). For the
// bipartite graphs of the census every edge joins the two ranges; cubic
// inputs to the subdivided-double constructions use n4 = 0 and arbitrary
// edges.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  // Throws Error on loops, repeated edges or out-of-range endpoints.
  Graph(int n3, int n4, const std::vector<Edge>& edges);

  int n3() const { return n3_; }
  int n4() const { return n4_; }
  int vertex_count() const { return n3_ + n4_; }
  int edge_count() const { return edge_count_; }
  int valence(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  // Every edge joins the two index ranges.
  bool split_bipartite() const;
  // Vertices n3.. have valence 4 and vertices ..n3-1 valence 3, both ranges nonempty.
  bool biregular_34() const;
  bool connected() const;

  // Same graph with vertex v renamed perm[v]; n3/n4 are kept.
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n3_ = 0;
  int n4_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

Graph complete_bipartite(int a, int b);

struct GraphStats {
  std::optional<int> girth;     // nullopt for a forest
  std::optional<int> diameter;  // nullopt when disconnected
  bool worthy = true;
  bool connected = true;
  std::map<int, int> valence_profile;  // valence -> vertex count
  bool configuration_flag = false;      // girth >= 6

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

std::optional<int> girth(const Graph& g);
// Throws DisconnectedInput.
int diameter(const Graph& g);
// No two vertices share a neighbourhood.
bool worthy(const Graph& g);
GraphStats graph_stats(const Graph& g);

// K4, K33, Cube, Petersen, Heawood (cubic, n4 = 0) and K34 (bipartite,
// n3 = 4, n4 = 3). Throws UnknownName.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

// LAT34 graph file:
//   LAT34 1
//   n3=<int> n4=<int> m=<int>
//   <u> <v>      (m lines, sorted, u < v)
// For n4 > 0 every edge must satisfy u < n3 <= v.
std::string write_graph(const Graph& g);
// Throws ParseError.
Graph read_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace lat34
