#include "lat34/subdouble.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lat34/errors.hpp"
#include "lat34/symmetry.hpp"

namespace lat34 {
namespace {

void require_cubic(const Graph& lambda) {
  for (int v = 0; v < lambda.vertex_count(); ++v) {
    if (lambda.valence(v) != 3) throw NotCubic("vertex " + std::to_string(v) + " has valence " + std::to_string(lambda.valence(v)));
  }
  if (lambda.vertex_count() == 0) throw NotCubic("empty graph");
}

// Edge vertex of the double / subdivision for each edge of lambda.
std::map<Graph::Edge, int> edge_index(const Graph& lambda) {
  std::map<Graph::Edge, int> out;
  for (auto e : lambda.edges()) out.emplace(e, static_cast<int>(out.size()));
  return out;
}

}  // namespace

Graph subdivision(const Graph& lambda) {
  const int n = lambda.vertex_count();
  std::vector<Graph::Edge> edges;
  int e = n;
  for (auto [a, b] : lambda.edges()) {
    edges.emplace_back(a, e);
    edges.emplace_back(b, e);
    ++e;
  }
  return Graph(n, lambda.edge_count(), edges);
}

Graph subdivided_double(const Graph& lambda) {
  require_cubic(lambda);
  const int n = lambda.vertex_count();
  std::vector<Graph::Edge> edges;
  int e = 2 * n;
  for (auto [a, b] : lambda.edges()) {
    for (int i = 0; i < 2; ++i) {
      edges.emplace_back(i * n + a, e);
      edges.emplace_back(i * n + b, e);
    }
    ++e;
  }
  return Graph(2 * n, lambda.edge_count(), edges);
}

RecognitionResult recognize_unworthy(const Graph& g) {
  if (!g.biregular_34() || !g.split_bipartite()) return Malformed{"not biregular of valence {3,4}"};
  if (!g.connected()) return Malformed{"disconnected"};
  const int nv = g.vertex_count();
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < nv; ++v) classes[g.neighbors(v)].push_back(v);
  if (static_cast<int>(classes.size()) == nv) return NotUnworthy{};

  for (const auto& [nb, members] : classes) {
    if (members.size() < 2) continue;
    // A block as large as the valence of its neighbours.
    if (static_cast<int>(members.size()) == g.valence(nb.front())) {
      if (g.n3() == 4 && g.n4() == 3 && g.edge_count() == 12) return RecognizedK34{};
      return Malformed{"block of size " + std::to_string(members.size()) + " outside K_{3,4}"};
    }
  }

  // Blocks: pairs of valence-3 vertices with equal neighbourhoods.
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(nv, -1);
  for (const auto& [nb, members] : classes) {
    bool side3 = members.front() < g.n3();
    if (!side3 && members.size() > 1) return Malformed{"valence-4 vertices share a neighbourhood"};
    if (side3 && members.size() != 2) return Malformed{"valence-3 block of size " + std::to_string(members.size())};
    if (side3) blocks.push_back(members);
  }
  std::sort(blocks.begin(), blocks.end());
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int v : blocks[b]) block_of[v] = b;
  }
  std::set<Graph::Edge> lambda_edges;
  for (int w = g.n3(); w < nv; ++w) {
    std::set<int> adjacent_blocks;
    for (int x : g.neighbors(w)) adjacent_blocks.insert(block_of[x]);
    if (adjacent_blocks.size() != 2) return Malformed{"valence-4 vertex meets " + std::to_string(adjacent_blocks.size()) + " blocks"};
    Graph::Edge e{*adjacent_blocks.begin(), *adjacent_blocks.rbegin()};
    if (!lambda_edges.insert(e).second) return Malformed{"4-cycle through two blocks"};
  }
  const int nb = static_cast<int>(blocks.size());
  Graph lambda(nb, 0, std::vector<Graph::Edge>(lambda_edges.begin(), lambda_edges.end()));
  for (int b = 0; b < nb; ++b) {
    if (lambda.valence(b) != 3) return Malformed{"suppressed graph is not cubic"};
  }
  if (!lambda.connected()) return Malformed{"suppressed graph is disconnected"};
  return RecognizedDouble{std::move(lambda)};
}

std::string describe(const RecognitionResult& r) {
  if (std::holds_alternative<RecognizedK34>(r)) return "K34";
  if (auto* d = std::get_if<RecognizedDouble>(&r)) {
    return "double of a cubic graph on " + std::to_string(d->lambda.vertex_count()) + " vertices";
  }
  if (std::holds_alternative<NotUnworthy>(r)) return "worthy";
  return "malformed: " + std::get<Malformed>(r).reason;
}

std::vector<Permutation> flip_generators(const Graph& lambda) {
  const int n = lambda.vertex_count();
  const int total = 2 * n + lambda.edge_count();
  std::vector<Permutation> out;
  for (int v = 0; v < n; ++v) out.push_back(Permutation::from_cycles(total, {{v, n + v}}));
  return out;
}

std::vector<Permutation> lifted_automorphisms(const Graph& lambda, const std::vector<Permutation>& aut) {
  const int n = lambda.vertex_count();
  auto index = edge_index(lambda);
  const int total = 2 * n + lambda.edge_count();
  std::vector<Permutation> out;
  for (const Permutation& s : aut) {
    std::vector<int> img(total);
    for (int v = 0; v < n; ++v) {
      img[v] = s[v];
      img[n + v] = n + s[v];
    }
    for (auto [e, k] : index) {
      int a = s[e.first], b = s[e.second];
      img[2 * n + k] = 2 * n + index.at({std::min(a, b), std::max(a, b)});
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

DoubleKernels double_kernels(const Graph& lambda) {
  require_cubic(lambda);
  Graph d = subdivided_double(lambda);
  const int n = lambda.vertex_count();
  DoubleKernels k;
  k.n = n;
  auto gens = flip_generators(lambda);
  for (auto& p : lifted_automorphisms(lambda, canonical_form(lambda).generators)) gens.push_back(std::move(p));
  PermGroup constructed(d.vertex_count(), gens);

  const int v = 0;
  const int u = d.neighbors(v).front();
  std::vector<int> points = d.neighbors(v);
  for (int w : d.neighbors(u)) points.push_back(w);
  points.push_back(v);
  points.push_back(u);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  k.constructed = pointwise_stabilizer(constructed, points).order();
  k.full = pointwise_stabilizer(automorphism_group(d), points).order();
  BigInt need = BigInt(1) << std::max(0, n - 2);
  k.constructed_divisible = k.constructed % need == 0;
  k.full_divisible = k.full % need == 0;
  return k;
}

bool kernel_divisibility_check(const Graph& lambda) { return double_kernels(lambda).constructed_divisible; }

}  // namespace lat34
