#include <algorithm>
#include <numeric>

#include "lat34/errors.hpp"
#include "lat34/fpgroup.hpp"

namespace lat34 {
namespace {

constexpr int kUndef = -1;

// Coset table with coincidence handling (union-find over coset numbers).
// Cosets are never reused, so storage grows with the number of definitions.
class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::int64_t max_cosets)
      : ncols_(2 * pres.generator_count()), max_live_(max_cosets) {
    if (max_cosets < 1) throw Error("max_cosets must be at least 1");
    for (const Word& r : pres.relators()) {
      std::vector<int> cols;
      for (Letter l : r.letters()) cols.push_back(column_of(l));
      relators_.push_back(std::move(cols));
    }
    for (const auto& r : relators_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::vector<int> conj(r.begin() + i, r.end());
        conj.insert(conj.end(), r.begin(), r.begin() + i);
        conjugates_.push_back(std::move(conj));
      }
    }
    new_coset();
  }

  bool live(int c) const { return rep_[c] == c; }
  int created() const { return static_cast<int>(rep_.size()); }

  int& at(int c, int col) { return table_[static_cast<std::size_t>(c) * ncols_ + col]; }

  // Adds a row; returns false when the live cap is reached.
  bool can_define() const { return live_count_ < max_live_; }

  int new_coset() {
    int c = created();
    rep_.push_back(c);
    table_.resize(table_.size() + ncols_, kUndef);
    ++live_count_;
    return c;
  }

  void define(int c, int col) {
    int d = new_coset();
    at(c, col) = d;
    at(d, inverse_column(col)) = c;
    deductions_.push_back({c, col});
  }

  int find(int c) {
    int r = c;
    while (rep_[r] != r) r = rep_[r];
    while (rep_[c] != r) {
      int next = rep_[c];
      rep_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    --live_count_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int g = queue[i];
      for (int col = 0; col < ncols_; ++col) {
        int d = at(g, col);
        if (d == kUndef) continue;
        int icol = inverse_column(col);
        if (at(d, icol) == g) at(d, icol) = kUndef;
        int mu = find(g);
        int nu = find(d);
        if (at(mu, col) != kUndef) {
          merge(nu, at(mu, col), queue);
        } else if (at(nu, icol) != kUndef) {
          merge(mu, at(nu, icol), queue);
        } else {
          at(mu, col) = nu;
          at(nu, icol) = mu;
          deductions_.push_back({mu, col});
        }
      }
    }
  }

  enum class Scan { kDone, kNeedSpace };

  // Scans relator `w` at coset c, defining cosets to complete it when
  // `fill` is set.
  Scan scan(int c, const std::vector<int>& w, bool fill) {
    const int n = static_cast<int>(w.size());
    for (;;) {
      int f = c, i = 0;
      while (i < n && at(f, w[i]) != kUndef) f = at(f, w[i++]);
      if (i == n) {
        if (f != c) coincidence(f, c);
        return Scan::kDone;
      }
      int b = c, j = n - 1;
      while (j >= i && at(b, inverse_column(w[j])) != kUndef) b = at(b, inverse_column(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return Scan::kDone;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inverse_column(w[i])) = f;
        deductions_.push_back({f, w[i]});
        return Scan::kDone;
      }
      if (!fill) return Scan::kDone;
      if (!can_define()) return Scan::kNeedSpace;
      define(f, w[i]);
    }
  }

  // Scans every relator at every live coset without defining anything.
  void lookahead() {
    for (int c = 0; c < created(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan(c, r, false);
      }
    }
    deductions_.clear();
  }

  void ensure_space() {
    if (can_define()) return;
    lookahead();
    if (!can_define()) {
      throw CapExceeded("coset enumeration exceeded " + std::to_string(max_live_) + " live cosets");
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    while (live(c) && scan(c, w, true) == Scan::kNeedSpace) ensure_space();
  }

  void process_subgroup(const std::vector<Word>& gens) {
    for (const Word& g : gens) {
      std::vector<int> cols;
      const Word reduced = g.reduced();
      for (Letter l : reduced.letters()) cols.push_back(column_of(l));
      if (!cols.empty()) scan_and_fill(0, cols);
    }
  }

  void run_hlt() {
    for (int c = 0; c < created(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      for (int col = 0; col < ncols_ && live(c); ++col) {
        if (at(c, col) == kUndef) {
          ensure_space();
          if (live(c) && at(c, col) == kUndef) define(c, col);
        }
      }
      deductions_.clear();
    }
  }

  // Felsch: define the first undefined entry, then close under deductions.
  void run_felsch() {
    process_deductions();
    for (int c = 0; c < created(); ++c) {
      for (int col = 0; col < ncols_; ++col) {
        if (!live(c)) break;
        if (at(c, col) != kUndef) continue;
        if (!can_define()) {
          throw CapExceeded("coset enumeration exceeded " + std::to_string(max_live_) + " live cosets");
        }
        define(c, col);
        process_deductions();
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& r : conjugates_) {
        if (r.front() == col && live(c)) scan(c, r, false);
      }
      int d = at(c, col);
      if (d == kUndef || !live(d)) continue;
      int icol = inverse_column(col);
      for (const auto& r : conjugates_) {
        if (r.front() == icol && live(d)) scan(d, r, false);
      }
    }
  }

  CosetTable standardized(int generator_count) {
    // Renumber live cosets in order of first appearance in a row-major scan.
    std::vector<int> number(created(), kUndef);
    std::vector<int> order{0};
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int col = 0; col < ncols_; ++col) {
        int d = at(order[i], col);
        if (d == kUndef) continue;
        d = find(d);
        if (number[d] == kUndef) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetTable t;
    t.generator_count = generator_count;
    t.rows = static_cast<int>(order.size());
    t.entries.assign(static_cast<std::size_t>(t.rows) * ncols_, kUndef);
    for (int r = 0; r < t.rows; ++r) {
      for (int col = 0; col < ncols_; ++col) {
        int d = at(order[r], col);
        t.entries[static_cast<std::size_t>(r) * ncols_ + col] = d == kUndef ? kUndef : number[find(d)];
      }
    }
    return t;
  }

 private:
  int ncols_;
  std::int64_t max_live_;
  std::int64_t live_count_ = 0;
  std::vector<int> table_;
  std::vector<int> rep_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> conjugates_;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                           EnumerationOptions options) {
  Enumerator e(pres, options.max_cosets);
  e.process_subgroup(subgroup_gens);
  e.run_hlt();
  CosetTable t = e.standardized(pres.generator_count());
  if (!t.complete()) throw Error("coset enumeration finished with an incomplete table");
  return t;
}

CosetTable coset_enumerate_felsch(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                                  EnumerationOptions options) {
  Enumerator e(pres, options.max_cosets);
  e.process_subgroup(subgroup_gens);
  e.run_felsch();
  CosetTable t = e.standardized(pres.generator_count());
  if (!t.complete()) throw Error("coset enumeration finished with an incomplete table");
  return t;
}

std::vector<Permutation> table_to_perms(const CosetTable& table) {
  if (!table.complete()) throw IncompleteTable("table_to_perms requires a complete coset table");
  std::vector<Permutation> perms;
  for (int g = 0; g < table.generator_count; ++g) {
    std::vector<int> images(table.rows);
    for (int c = 0; c < table.rows; ++c) images[c] = table.entry(c, 2 * g);
    perms.emplace_back(std::move(images));
  }
  return perms;
}

}  // namespace lat34
