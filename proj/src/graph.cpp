#include "lat34/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "lat34/errors.hpp"

namespace lat34 {

Graph::Graph(int n3, int n4, const std::vector<Edge>& edges) : n3_(n3), n4_(n4), adj_(n3 + n4) {
  if (n3 < 0 || n4 < 0) throw Error("Graph: negative part size");
  const int n = n3 + n4;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("Graph: edge endpoint out of range");
    if (u == v) throw Error("Graph: loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw Error("Graph: repeated edge");
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool Graph::adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::split_bipartite() const {
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if ((u < n3_) == (v < n3_)) return false;
    }
  }
  return true;
}

bool Graph::biregular_34() const {
  if (n3_ == 0 || n4_ == 0) return false;
  for (int v = 0; v < vertex_count(); ++v) {
    if (valence(v) != (v < n3_ ? 3 : 4)) return false;
  }
  return split_bipartite();
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == vertex_count();
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  std::vector<Edge> es;
  for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
  return Graph(n3_, n4_, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Graph::Edge> es;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  }
  return Graph(a, b, es);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int diameter(const Graph& g) {
  const int n = g.vertex_count();
  int diam = 0;
  std::vector<int> dist(n);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    queue.assign(1, root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (static_cast<int>(queue.size()) != n) throw DisconnectedInput("diameter of a disconnected graph");
    diam = std::max(diam, dist[queue.back()]);
  }
  return diam;
}

bool worthy(const Graph& g) {
  std::set<std::vector<int>> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen.insert(g.neighbors(v)).second) return false;
  }
  return true;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.girth = girth(g);
  s.connected = g.connected();
  if (s.connected) s.diameter = diameter(g);
  s.worthy = worthy(g);
  for (int v = 0; v < g.vertex_count(); ++v) ++s.valence_profile[g.valence(v)];
  s.configuration_flag = s.girth && *s.girth >= 6;
  return s;
}

namespace {

Graph cubic(int n, const std::vector<Graph::Edge>& edges) { return Graph(n, 0, edges); }

}  // namespace

std::vector<std::string> fixture_names() { return {"K4", "K33", "Cube", "Petersen", "Heawood", "K34"}; }

Graph fixture(const std::string& name) {
  if (name == "K4") return cubic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "K33") {
    return cubic(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  }
  if (name == "Cube") {
    std::vector<Graph::Edge> es;
    for (int v = 0; v < 8; ++v) {
      for (int bit = 1; bit < 8; bit <<= 1) {
        if (v < (v ^ bit)) es.emplace_back(v, v ^ bit);
      }
    }
    return cubic(8, es);
  }
  if (name == "Petersen") {
    std::vector<Graph::Edge> es;
    for (int i = 0; i < 5; ++i) {
      es.emplace_back(i, (i + 1) % 5);
      es.emplace_back(i, i + 5);
      es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return cubic(10, es);
  }
  if (name == "Heawood") {
    // LCF notation [5,-5]^7.
    std::vector<Graph::Edge> es;
    for (int i = 0; i < 14; ++i) {
      es.emplace_back(i, (i + 1) % 14);
      if (i % 2 == 0) es.emplace_back(i, (i + 5) % 14);
    }
    return cubic(14, es);
  }
  if (name == "K34") return complete_bipartite(4, 3);
  throw UnknownName("unknown fixture graph: " + name);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "LAT34 1\n";
  out << "n3=" << g.n3() << " n4=" << g.n4() << " m=" << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

int parse_field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=<int>, got '" + token + "'");
  const std::string value = token.substr(key.size() + 1);
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("bad integer in '" + token + "'");
  }
  return std::stoi(value);
}

}  // namespace

Graph read_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "LAT34 1") throw ParseError("missing 'LAT34 1' header");
  if (!std::getline(in, line)) throw ParseError("missing size line");
  std::istringstream sizes(line);
  std::string t3, t4, tm, extra;
  sizes >> t3 >> t4 >> tm;
  if (sizes >> extra) throw ParseError("trailing data on size line");
  const int n3 = parse_field(t3, "n3");
  const int n4 = parse_field(t4, "n4");
  const int m = parse_field(tm, "m");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw ParseError("expected " + std::to_string(m) + " edge lines");
    std::istringstream es(line);
    int u, v;
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("bad edge line: '" + line + "'");
    if (u < 0 || u >= v || v >= n3 + n4) throw ParseError("edge out of range or unordered: '" + line + "'");
    if (n4 > 0 && !(u < n3 && n3 <= v)) throw ParseError("edge does not join the two parts: '" + line + "'");
    edges.emplace_back(u, v);
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw ParseError("trailing data after edge list");
  }
  return Graph(n3, n4, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return read_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << write_graph(g);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace lat34
