#include <algorithm>
#include <numeric>

#include "lat34/symmetry.hpp"

namespace lat34 {
namespace {

// Ordered partition of the vertices: lab holds the vertices cell by cell,
// start_of[v] is the first position of v's cell and end_[s] one past the
// last position of the cell starting at s.
struct Partition {
  std::vector<int> lab;
  std::vector<int> pos;
  std::vector<int> start_of;
  std::vector<int> end_;

  explicit Partition(int n) : lab(n), pos(n), start_of(n), end_(n, 0) {}

  bool discrete() const {
    for (int i = 0; i < static_cast<int>(lab.size()); i = end_[i]) {
      if (end_[i] - i > 1) return false;
    }
    return true;
  }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  CanonicalForm run() {
    CanonicalForm out;
    Partition p(n_);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int v) { return std::pair{v < g_.n3() ? 0 : 1, g_.valence(v)}; };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<int> splitters;
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && key(order[j]) == key(order[i])) ++j;
      for (int k = i; k < j; ++k) {
        p.lab[k] = order[k];
        p.pos[order[k]] = k;
        p.start_of[order[k]] = i;
      }
      p.end_[i] = j;
      splitters.push_back(i);
      i = j;
    }
    refine(p, splitters);
    if (n_ > 0) search(p, {});
    out.bytes = certificate_bytes(best_cert_);
    out.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.labeling[best_lab_[i]] = i;
    out.generators = automorphisms_;
    out.leaves = leaves_;
    return out;
  }

 private:
  using Certificate = std::vector<std::pair<int, int>>;

  void refine(Partition& p, std::vector<int> queue) {
    std::vector<int> count(n_, 0);
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
      int w = queue[head++];
      queued[w] = 0;
      if (p.discrete()) break;
      std::vector<int> touched;
      for (int i = w; i < p.end_[w]; ++i) {
        for (int x : g_.neighbors(p.lab[i])) {
          if (count[x]++ == 0) touched.push_back(x);
        }
      }
      std::vector<int> cells;
      for (int x : touched) cells.push_back(p.start_of[x]);
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      for (int c : cells) {
        int e = p.end_[c];
        if (e - c == 1) continue;
        std::stable_sort(p.lab.begin() + c, p.lab.begin() + e,
                         [&](int a, int b) { return count[a] < count[b]; });
        if (count[p.lab[c]] == count[p.lab[e - 1]]) continue;
        bool was_queued = queued[c];
        int largest = c, largest_size = 0;
        std::vector<int> parts;
        for (int i = c; i < e;) {
          int j = i;
          while (j < e && count[p.lab[j]] == count[p.lab[i]]) ++j;
          for (int k = i; k < j; ++k) {
            p.pos[p.lab[k]] = k;
            p.start_of[p.lab[k]] = i;
          }
          p.end_[i] = j;
          parts.push_back(i);
          if (j - i > largest_size) {
            largest = i;
            largest_size = j - i;
          }
          i = j;
        }
        for (int s : parts) {
          if (was_queued || s != largest) {
            if (!queued[s]) {
              queued[s] = 1;
              queue.push_back(s);
            }
          }
        }
      }
      for (int x : touched) count[x] = 0;
    }
  }

  Certificate certificate(const std::vector<int>& lab) const {
    std::vector<int> label(n_);
    for (int i = 0; i < n_; ++i) label[lab[i]] = i;
    Certificate c;
    c.reserve(g_.edge_count());
    for (auto [a, b] : g_.edges()) {
      int x = label[a], y = label[b];
      c.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(c.begin(), c.end());
    return c;
  }

  std::string certificate_bytes(const Certificate& c) const {
    std::string out;
    auto put = [&](std::uint32_t x) {
      for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((x >> shift) & 0xff));
    };
    put(g_.n3());
    put(g_.n4());
    put(static_cast<std::uint32_t>(c.size()));
    for (auto [a, b] : c) {
      put(a);
      put(b);
    }
    return out;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> img(n_);
    for (int i = 0; i < n_; ++i) img[from[i]] = to[i];
    Permutation a(std::move(img));
    if (!a.is_identity()) automorphisms_.push_back(std::move(a));
  }

  // Orbit representative test: x is skipped when a smaller point of its
  // orbit under the stored automorphisms fixing `prefix` exists.
  bool orbit_minimal(int x, const std::vector<int>& prefix) const {
    std::vector<const Permutation*> gens;
    for (const Permutation& a : automorphisms_) {
      if (std::all_of(prefix.begin(), prefix.end(), [&](int v) { return a[v] == v; })) gens.push_back(&a);
    }
    if (gens.empty()) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      if (y < x) return false;
      for (const Permutation* a : gens) {
        int z = (*a)[y];
        if (!seen[z]) {
          seen[z] = 1;
          stack.push_back(z);
        }
      }
    }
    return true;
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Returns the depth to unwind to: the search continues at the first node
  // whose depth is <= the returned value.
  std::size_t search(const Partition& p, std::vector<int> prefix) {
    const std::size_t depth = prefix.size();
    if (p.discrete()) {
      ++leaves_;
      Certificate c = certificate(p.lab);
      if (first_lab_.empty()) {
        first_lab_ = p.lab;
        first_prefix_ = prefix;
        first_cert_ = c;
        best_lab_ = p.lab;
        best_prefix_ = prefix;
        best_cert_ = std::move(c);
        return depth;
      }
      if (c == first_cert_) {
        record_automorphism(p.lab, first_lab_);
        return common_prefix(prefix, first_prefix_);
      }
      if (c == best_cert_) {
        record_automorphism(p.lab, best_lab_);
        return common_prefix(prefix, best_prefix_);
      }
      if (c < best_cert_) {
        best_lab_ = p.lab;
        best_prefix_ = prefix;
        best_cert_ = std::move(c);
      }
      return depth;
    }

    int target = -1, target_size = n_ + 1;
    for (int i = 0; i < n_; i = p.end_[i]) {
      int size = p.end_[i] - i;
      if (size > 1 && size < target_size) {
        target = i;
        target_size = size;
      }
    }
    std::vector<int> cell(p.lab.begin() + target, p.lab.begin() + p.end_[target]);
    std::sort(cell.begin(), cell.end());
    for (int x : cell) {
      if (!orbit_minimal(x, prefix)) continue;
      Partition child = p;
      // Individualize x: it becomes a singleton cell in front of the rest.
      int e = p.end_[target];
      int at = child.pos[x];
      std::swap(child.lab[at], child.lab[target]);
      child.pos[child.lab[at]] = at;
      child.pos[x] = target;
      child.end_[target] = target + 1;
      child.end_[target + 1] = e;
      for (int k = target + 1; k < e; ++k) child.start_of[child.lab[k]] = target + 1;
      child.start_of[x] = target;
      refine(child, {target});
      prefix.push_back(x);
      std::size_t back = search(child, prefix);
      prefix.pop_back();
      if (back < depth) return back;
    }
    return depth;
  }

  const Graph& g_;
  int n_;
  std::vector<Permutation> automorphisms_;
  std::vector<int> first_lab_, first_prefix_, best_lab_, best_prefix_;
  Certificate first_cert_, best_cert_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_form(g).labeling); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.n3() == b.n3() && a.n4() == b.n4() && a.edge_count() == b.edge_count() &&
         canonical_form(a).bytes == canonical_form(b).bytes;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((v < g.n3()) != (p[v] < g.n3())) return false;
  }
  for (auto [a, b] : g.edges()) {
    if (!g.adjacent(p[a], p[b])) return false;
  }
  return true;
}

PermGroup automorphism_group(const Graph& g) {
  return PermGroup(g.vertex_count(), canonical_form(g).generators);
}

}  // namespace lat34
