#include "lat34/coset_graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "lat34/symmetry.hpp"

namespace lat34 {
namespace {

std::vector<Permutation> images(const QuotientRecord& q, const std::vector<Word>& words) {
  std::vector<Permutation> out;
  for (const Word& w : words) out.push_back(evaluate(q, w));
  return out;
}

std::vector<int> point_orbit(int degree, int start, const std::vector<Permutation>& gens) {
  std::vector<char> seen(degree, 0);
  std::vector<int> orbit{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation& g : gens) {
      int p = g[orbit[i]];
      if (!seen[p]) {
        seen[p] = 1;
        orbit.push_back(p);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

// Elements of the group generated by gens, stopping once more than cap are
// found.
std::set<Permutation> closure(const std::vector<Permutation>& gens, int degree, std::size_t cap) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> todo{Permutation::identity(degree)};
  while (!todo.empty() && seen.size() <= cap) {
    Permutation x = todo.back();
    todo.pop_back();
    for (const Permutation& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return seen;
}

std::vector<int> image_of(const std::vector<int>& set, const Permutation& g) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int p : set) out.push_back(g[p]);
  std::sort(out.begin(), out.end());
  return out;
}

// Images of `seed` under the group generated by gens, as a list of sets and
// the action of each generator on that list. Sets are numbered by their
// smallest point.
struct SetOrbit {
  std::vector<std::vector<int>> sets;
  std::vector<std::vector<int>> action;  // action[g][i] = index of sets[i]^g
};

SetOrbit set_orbit(const std::vector<int>& seed, const std::vector<Permutation>& gens) {
  SetOrbit out;
  std::map<std::vector<int>, int> index{{seed, 0}};
  out.sets.push_back(seed);
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    for (const Permutation& g : gens) {
      auto img = image_of(out.sets[i], g);
      if (index.emplace(img, static_cast<int>(out.sets.size())).second) out.sets.push_back(std::move(img));
    }
  }
  // Renumber by least point, then record the generator action.
  std::vector<int> order(out.sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return out.sets[x] < out.sets[y]; });
  std::vector<std::vector<int>> sorted;
  for (int i : order) sorted.push_back(out.sets[i]);
  out.sets = std::move(sorted);
  index.clear();
  for (std::size_t i = 0; i < out.sets.size(); ++i) index.emplace(out.sets[i], static_cast<int>(i));
  for (const Permutation& g : gens) {
    std::vector<int> act(out.sets.size());
    for (std::size_t i = 0; i < out.sets.size(); ++i) act[i] = index.at(image_of(out.sets[i], g));
    out.action.push_back(std::move(act));
  }
  return out;
}

}  // namespace

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::LNotEmbedded: return "L-not-embedded";
    case RejectReason::RNotEmbedded: return "R-not-embedded";
    case RejectReason::BadIntersection: return "intersection";
    case RejectReason::StabilizerTooLarge: return "stabilizer";
    case RejectReason::Degenerate: return "degenerate";
  }
  return "?";
}

std::variant<CosetGraph, Rejected> coset_graph_with_action(const QuotientRecord& q, const Amalgam& a) {
  const int n = q.degree;
  // In the regular action the orbit of 0 under a subgroup is the subgroup
  // itself, and the right cosets of it are the images of that orbit.
  std::vector<int> l0 = point_orbit(n, 0, images(q, a.l_words));
  std::vector<int> r0 = point_orbit(n, 0, images(q, a.r_words));
  std::vector<int> b0 = point_orbit(n, 0, images(q, a.b_words));
  if (static_cast<int>(l0.size()) != a.declared.l) return Rejected{RejectReason::LNotEmbedded};
  if (static_cast<int>(r0.size()) != a.declared.r) return Rejected{RejectReason::RNotEmbedded};
  std::vector<int> meet;
  std::set_intersection(l0.begin(), l0.end(), r0.begin(), r0.end(), std::back_inserter(meet));
  if (meet.size() != b0.size()) return Rejected{RejectReason::BadIntersection};

  SetOrbit lc = set_orbit(l0, q.generator_perms);
  SetOrbit rc = set_orbit(r0, q.generator_perms);
  const int n3 = static_cast<int>(lc.sets.size());
  const int n4 = static_cast<int>(rc.sets.size());
  std::vector<int> l_of(n), r_of(n);
  for (int i = 0; i < n3; ++i) {
    for (int p : lc.sets[i]) l_of[p] = i;
  }
  for (int i = 0; i < n4; ++i) {
    for (int p : rc.sets[i]) r_of[p] = i;
  }
  std::set<Graph::Edge> edges;
  for (int p = 0; p < n; ++p) edges.emplace(l_of[p], n3 + r_of[p]);
  CosetGraph out{Graph(n3, n4, std::vector<Graph::Edge>(edges.begin(), edges.end())), {}};
  for (std::size_t g = 0; g < q.generator_perms.size(); ++g) {
    std::vector<int> img(n3 + n4);
    for (int i = 0; i < n3; ++i) img[i] = lc.action[g][i];
    for (int i = 0; i < n4; ++i) img[n3 + i] = n3 + rc.action[g][i];
    out.action.emplace_back(std::move(img));
  }
  return out;
}

std::variant<Graph, Rejected> coset_graph(const QuotientRecord& q, const Amalgam& a) {
  auto r = coset_graph_with_action(q, a);
  if (auto* rej = std::get_if<Rejected>(&r)) return *rej;
  return std::get<CosetGraph>(std::move(r)).graph;
}

std::variant<CosetGraph, Rejected> action_coset_graph(const QuotientRecord& q, const Amalgam& a) {
  const int n = q.degree;
  std::vector<Permutation> lg = images(q, a.l_words);
  std::vector<Permutation> rg = images(q, a.r_words);
  std::set<Permutation> l_elems = closure(lg, n, a.declared.l);
  if (static_cast<int>(l_elems.size()) != a.declared.l) return Rejected{RejectReason::LNotEmbedded};
  if (static_cast<int>(closure(rg, n, a.declared.r).size()) != a.declared.r) return Rejected{RejectReason::RNotEmbedded};
  for (const Permutation& x : lg) {
    if (x[0] != 0) return Rejected{RejectReason::LNotEmbedded};
  }
  std::vector<int> o = point_orbit(n, 0, rg);
  if (static_cast<int>(o.size()) != 4) return Rejected{RejectReason::BadIntersection};

  // Schreier generators of the stabiliser of 0 must all lie in im L.
  std::vector<std::optional<Permutation>> t(n);
  t[0] = Permutation::identity(n);
  std::vector<int> reached{0};
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (const Permutation& s : q.generator_perms) {
      int p = s[reached[i]];
      if (!t[p]) {
        t[p] = *t[reached[i]] * s;
        reached.push_back(p);
      }
    }
  }
  if (static_cast<int>(reached.size()) != n) return Rejected{RejectReason::Degenerate};
  for (int p = 0; p < n; ++p) {
    for (const Permutation& s : q.generator_perms) {
      if (!l_elems.count(*t[p] * s * t[s[p]]->inverse())) return Rejected{RejectReason::StabilizerTooLarge};
    }
  }

  SetOrbit rc = set_orbit(o, q.generator_perms);
  const int n4 = static_cast<int>(rc.sets.size());
  if (static_cast<long long>(n4) * a.declared.r != static_cast<long long>(n) * a.declared.l) {
    return Rejected{RejectReason::Degenerate};
  }
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n4; ++i) {
    for (int p : rc.sets[i]) edges.emplace_back(p, n + i);
  }
  std::sort(edges.begin(), edges.end());
  CosetGraph out{Graph(n, n4, edges), {}};
  for (std::size_t g = 0; g < q.generator_perms.size(); ++g) {
    std::vector<int> img(n + n4);
    for (int p = 0; p < n; ++p) img[p] = q.generator_perms[g][p];
    for (int i = 0; i < n4; ++i) img[n + i] = n + rc.action[g][i];
    out.action.emplace_back(std::move(img));
  }
  return out;
}

bool verify_action(const CosetGraph& cg, const BigInt& group_order) {
  const Graph& g = cg.graph;
  for (const Permutation& p : cg.action) {
    if (!is_automorphism(g, p)) return false;
  }
  PermGroup h(g.vertex_count(), cg.action);
  if (h.order() != group_order) return false;
  if (h.orbits().size() != 2) return false;
  for (int v : {0, g.n3()}) {
    PermGroup hv = pointwise_stabilizer(h, {v});
    if (hv.orbit(g.neighbors(v).front()).size() != g.neighbors(v).size()) return false;
  }
  const int v = 0, u = g.neighbors(0).front();
  std::vector<int> pts = g.neighbors(v);
  for (int w : g.neighbors(u)) pts.push_back(w);
  pts.push_back(u);
  pts.push_back(v);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pointwise_stabilizer(h, pts).is_trivial();
}

}  // namespace lat34
