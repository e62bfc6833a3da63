#include <algorithm>
#include <sstream>

#include "lat34/errors.hpp"
#include "lat34/symmetry.hpp"

namespace lat34 {
namespace {

std::string action_name(const PermGroup& stab, const std::vector<int>& domain) {
  InducedAction act = induced_action(stab, domain);
  auto name = identify(fingerprint(act.image));
  return name ? *name : "?";
}

std::vector<int> closed_neighbourhood(const Graph& g, int v) {
  std::vector<int> out = g.neighbors(v);
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string factored(const BigInt& n) {
  if (n <= 1) return "1";
  BigInt rest = n;
  std::ostringstream out;
  bool first = true;
  for (BigInt p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << p;
    if (e > 1) out << '^' << e;
  }
  if (rest > 1) {
    if (!first) out << '*';
    out << rest;
  }
  return out.str();
}

int arc_transitivity(const Graph& g, const PermGroup& group, int v) {
  PermGroup stab = pointwise_stabilizer(group, {v});
  const BigInt order = stab.order();
  // The lexicographically first s-arc from v, extended one step at a time.
  std::vector<int> arc{v};
  BigInt arcs = 1;
  for (int s = 1; s <= kMaxArcLength + 1; ++s) {
    int last = arc.back();
    int prev = arc.size() > 1 ? arc[arc.size() - 2] : -1;
    int next = -1;
    int choices = 0;
    for (int w : g.neighbors(last)) {
      if (w == prev) continue;
      ++choices;
      if (next < 0) next = w;
    }
    if (choices == 0) return s - 1;
    arcs *= choices;
    arc.push_back(next);
    std::vector<int> points = arc;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    BigInt fix = pointwise_stabilizer(group, points).order();
    if (order != arcs * fix) return s - 1;
    if (s == kMaxArcLength + 1) break;
  }
  throw Error("s-arc transitivity exceeds " + std::to_string(kMaxArcLength));
}

SymmetryReport symmetry_report(const Graph& g) { return symmetry_report(g, automorphism_group(g)); }

SymmetryReport symmetry_report(const Graph& g, const PermGroup& aut) {
  if (!g.biregular_34() || !g.split_bipartite()) throw NotBiregular("graph is not biregular of valence {3,4}");
  SymmetryReport r;
  r.aut_order = aut.order();
  r.v = 0;
  r.u = g.neighbors(0).front();
  const int v = r.v, u = r.u;

  PermGroup av = pointwise_stabilizer(aut, {v});
  PermGroup au = pointwise_stabilizer(aut, {u});
  r.local_action_v3 = action_name(av, g.neighbors(v));
  r.local_action_v4 = action_name(au, g.neighbors(u));
  r.vertex_kernel_v = pointwise_stabilizer(aut, closed_neighbourhood(g, v)).order();
  r.vertex_kernel_u = pointwise_stabilizer(aut, closed_neighbourhood(g, u)).order();
  r.edge_stab_order = pointwise_stabilizer(aut, {std::min(u, v), std::max(u, v)}).order();
  std::vector<int> both = closed_neighbourhood(g, v);
  for (int w : g.neighbors(u)) both.push_back(w);
  both.push_back(u);
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  r.edge_kernel_order = pointwise_stabilizer(aut, both).order();
  r.edge_transitive = r.edge_stab_order * g.edge_count() == r.aut_order;

  r.locally_arc_transitive = true;
  for (const auto& orbit : aut.orbits()) {
    int w = orbit.front();
    PermGroup aw = pointwise_stabilizer(aut, {w});
    const auto& nb = g.neighbors(w);
    if (static_cast<int>(aw.orbit(nb.front()).size()) != static_cast<int>(nb.size())) {
      r.locally_arc_transitive = false;
      break;
    }
  }
  r.s_v = arc_transitivity(g, aut, v);
  r.s_u = arc_transitivity(g, aut, u);
  return r;
}

}  // namespace lat34
