#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

using lat34::Graph;
using lat34::Permutation;

namespace oracle {

std::size_t closure_size(const std::vector<Permutation>& gens, int degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Permutation x = todo.back();
    todo.pop_back();
    for (const Permutation& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

std::optional<int> girth_dfs(const Graph& g) {
  const int n = g.vertex_count();
  int best = n + 1;
  std::vector<char> on_path(n, 0);
  // Cycles through `start` whose other vertices are all larger than start.
  std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
    if (len + 1 >= best) return;
    for (int w : g.neighbors(v)) {
      if (w == start && len >= 2) best = std::min(best, len + 1);
      if (w > start && !on_path[w]) {
        on_path[w] = 1;
        dfs(start, w, len + 1);
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(s, s, 0);
    on_path[s] = 0;
  }
  if (best > n) return std::nullopt;
  return best;
}

std::uint64_t automorphisms_by_permutations(const Graph& g) {
  std::vector<int> p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  auto edges = g.edges();
  std::uint64_t count = 0;
  do {
    bool sides = true;
    for (int v = 0; v < g.vertex_count() && sides; ++v) sides = (v < g.n3()) == (p[v] < g.n3());
    if (!sides) continue;
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::vector<std::vector<int>> standardized(const std::vector<Permutation>& gens) {
  const int n = gens.front().degree();
  std::vector<int> label(n, -1), order{0};
  label[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Permutation& g : gens) {
      for (int q : {g[order[i]], g.inverse()[order[i]]}) {
        if (label[q] < 0) {
          label[q] = static_cast<int>(order.size());
          order.push_back(q);
        }
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (const Permutation& g : gens) {
    std::vector<int> img(n);
    for (int p = 0; p < n; ++p) img[label[p]] = label[g[p]];
    out.push_back(img);
  }
  return out;
}

namespace {

// Every permutation of 0..n-1 all of whose cycles have length len.
void uniform_cycle_perms(int n, int len, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> img(n, -1);
  std::function<void()> rec = [&] {
    int first = -1;
    for (int i = 0; i < n; ++i) {
      if (img[i] < 0) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      visit(img);
      return;
    }
    std::vector<int> cycle{first};
    std::function<void()> extend = [&] {
      if (static_cast<int>(cycle.size()) == len) {
        for (int k = 0; k < len; ++k) img[cycle[k]] = cycle[(k + 1) % len];
        rec();
        for (int k = 0; k < len; ++k) img[cycle[k]] = -1;
        return;
      }
      for (int c = first + 1; c < n; ++c) {
        if (img[c] >= 0 || std::find(cycle.begin(), cycle.end(), c) != cycle.end()) continue;
        cycle.push_back(c);
        extend();
        cycle.pop_back();
      }
    };
    extend();
  };
  rec();
}

}  // namespace

std::set<std::vector<std::vector<int>>> regular_pairs_u0(int max_degree) {
  std::set<std::vector<std::vector<int>>> out;
  for (int n = 1; n <= max_degree; ++n) {
    // In a regular action every element has all cycles of equal length, so
    // x is trivial or a product of 3-cycles; fix it up to conjugacy.
    std::vector<std::vector<int>> xs;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    xs.push_back(id);
    if (n % 3 == 0) {
      std::vector<int> x(n);
      for (int i = 0; i < n; i += 3) {
        x[i] = i + 1;
        x[i + 1] = i + 2;
        x[i + 2] = i;
      }
      xs.push_back(x);
    }
    std::vector<std::vector<int>> ys{id};
    for (int len : {2, 4}) {
      if (n % len == 0) uniform_cycle_perms(n, len, [&](const std::vector<int>& y) { ys.push_back(y); });
    }
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        std::vector<Permutation> gens{Permutation(x), Permutation(y)};
        std::set<Permutation> seen{Permutation::identity(n)};
        std::vector<Permutation> todo(seen.begin(), seen.end());
        while (!todo.empty() && static_cast<int>(seen.size()) <= n) {
          Permutation e = todo.back();
          todo.pop_back();
          for (const Permutation& g : gens) {
            Permutation f = e * g;
            if (seen.insert(f).second) todo.push_back(f);
          }
        }
        if (static_cast<int>(seen.size()) != n) continue;
        std::set<int> orbit;
        for (const Permutation& e : seen) orbit.insert(e[0]);
        if (static_cast<int>(orbit.size()) == n) out.insert(standardized(gens));
      }
    }
  }
  return out;
}

}  // namespace oracle
