#include "lat34/actions.hpp"

#include <algorithm>

namespace lat34 {
namespace {

constexpr int kUndef = -1;

std::vector<int> columns_of(const Word& w) {
  std::vector<int> cols;
  const Word reduced = w.reduced();
  for (Letter l : reduced.letters()) cols.push_back(column_of(l));
  return cols;
}

// Sims' low-index backtrack: entries are filled in row-major order, a new
// coset always takes the next number, so every subgroup is met once as its
// standardized table. Relators are scanned Felsch-style at every coset,
// stabilizer words at coset 0 only.
class ActionSearch {
 public:
  ActionSearch(const Presentation& pres, int max_degree, const ActionOptions& options,
               const std::function<void(QuotientRecord&&)>& sink, SearchStats& stats)
      : sink_(sink),
        ngens_(pres.generator_count()),
        ncols_(2 * pres.generator_count()),
        cap_(max_degree),
        options_(options),
        stats_(stats),
        table_(static_cast<std::size_t>(max_degree) * ncols_, kUndef),
        by_column_(ncols_) {
    for (const Word& r : pres.relators()) {
      auto cols = columns_of(r);
      const auto id = static_cast<int>(relators_.size());
      for (std::size_t p = 0; p < cols.size(); ++p) by_column_[cols[p]].push_back({id, static_cast<int>(p)});
      relators_.push_back(std::move(cols));
    }
    for (const Word& w : options.stabilizer) {
      auto cols = columns_of(w);
      if (!cols.empty()) stabilizer_.push_back(std::move(cols));
    }
    for (const Word& w : options.movers) movers_.push_back(columns_of(w));
    for (const Word& w : options.orbit_words) {
      auto cols = columns_of(w);
      if (cols.size() == 1) {
        orbit_cols_.push_back(cols[0]);
        orbit_cols_.push_back(inverse_column(cols[0]));
      }
    }
    std::sort(orbit_cols_.begin(), orbit_cols_.end());
    orbit_cols_.erase(std::unique(orbit_cols_.begin(), orbit_cols_.end()), orbit_cols_.end());
    mark_.assign(max_degree, 0);
  }

  void run() {
    ncosets_ = 1;
    if (settle()) search(0, 0);
  }

 private:
  int& at(int c, int col) { return table_[static_cast<std::size_t>(c) * ncols_ + col]; }

  void set(int c, int col, int d) {
    at(c, col) = d;
    at(d, inverse_column(col)) = c;
    trail_.push_back(c * ncols_ + col);
    trail_.push_back(d * ncols_ + inverse_column(col));
    queue_.push_back({c, col});
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = kUndef;
      trail_.pop_back();
    }
  }

  bool scan(int c, const std::vector<int>& w, int offset) {
    const int n = static_cast<int>(w.size());
    auto letter = [&](int i) { return w[(offset + i) % n]; };
    int f = c, i = 0;
    while (i < n) {
      int next = at(f, letter(i));
      if (next == kUndef) break;
      f = next;
      ++i;
    }
    if (i == n) return f == c;
    int b = c, j = n - 1;
    while (j > i) {
      int prev = at(b, inverse_column(letter(j)));
      if (prev == kUndef) break;
      b = prev;
      --j;
    }
    if (j == i) {
      int col = letter(i);
      if (at(b, inverse_column(col)) != kUndef) return false;
      set(f, col, b);
    }
    return true;
  }

  bool process() {
    while (!queue_.empty()) {
      auto [c, col] = queue_.back();
      queue_.pop_back();
      for (auto [id, offset] : by_column_[col]) {
        if (!scan(c, relators_[id], offset)) return false;
      }
      int d = at(c, col);
      for (auto [id, offset] : by_column_[inverse_column(col)]) {
        if (!scan(d, relators_[id], offset)) return false;
      }
    }
    return true;
  }

  // Closes the table under relators and stabilizer words; false on a
  // contradiction or a violated constraint.
  bool settle() {
    bool ok = true;
    for (;;) {
      ok = process();
      if (!ok) break;
      std::size_t before = trail_.size();
      for (const auto& w : stabilizer_) {
        if (!scan(0, w, 0)) {
          ok = false;
          break;
        }
      }
      if (!ok || trail_.size() == before) break;
    }
    queue_.clear();
    return ok && constraints_hold();
  }

  bool constraints_hold() {
    for (const auto& w : movers_) {
      int c = 0;
      for (int col : w) {
        c = at(c, col);
        if (c == kUndef) break;
      }
      if (c == 0) return false;
    }
    if (options_.orbit_size > 0) {
      orbit_.clear();
      orbit_.push_back(0);
      mark_[0] = 1;
      for (std::size_t i = 0; i < orbit_.size(); ++i) {
        for (int col : orbit_cols_) {
          int d = at(orbit_[i], col);
          if (d != kUndef && !mark_[d]) {
            mark_[d] = 1;
            orbit_.push_back(d);
          }
        }
      }
      for (int p : orbit_) mark_[p] = 0;
      if (static_cast<int>(orbit_.size()) > options_.orbit_size) return false;
    }
    return true;
  }

  void tick(int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    stats_.max_cosets_reached = std::max(stats_.max_cosets_reached, ncosets_);
    if (options_.progress && stats_.nodes % options_.progress_every == 0) options_.progress(stats_);
    if (stats_.nodes > options_.node_budget) {
      throw SearchBudgetExceeded("action search exceeded node budget of " + std::to_string(options_.node_budget) +
                                     " (degree bound " + std::to_string(cap_) + ")",
                                 stats_);
    }
  }

  void search(std::size_t pos, int depth) {
    tick(depth);
    const std::size_t limit = static_cast<std::size_t>(ncosets_) * ncols_;
    while (pos < limit && table_[pos] != kUndef) ++pos;
    if (pos == limit) {
      accept();
      return;
    }
    const int c = static_cast<int>(pos / ncols_);
    const int col = static_cast<int>(pos % ncols_);
    const int icol = inverse_column(col);
    const std::size_t mark = trail_.size();

    for (int d = 0; d < ncosets_; ++d) {
      if (at(d, icol) != kUndef) continue;
      set(c, col, d);
      if (settle()) search(pos + 1, depth + 1);
      queue_.clear();
      undo_to(mark);
    }
    if (ncosets_ < cap_) {
      ++ncosets_;
      set(c, col, ncosets_ - 1);
      if (settle()) search(pos + 1, depth + 1);
      queue_.clear();
      undo_to(mark);
      --ncosets_;
    }
  }

  void accept() {
    if (ncosets_ < options_.min_degree || ncosets_ % options_.degree_step != 0) return;
    if (options_.orbit_size > 0) {
      constraints_hold();
      if (static_cast<int>(orbit_.size()) != options_.orbit_size) return;
    }
    QuotientRecord q;
    q.degree = ncosets_;
    for (int g = 0; g < ngens_; ++g) {
      std::vector<int> images(ncosets_);
      for (int c = 0; c < ncosets_; ++c) images[c] = at(c, 2 * g);
      q.generator_perms.emplace_back(std::move(images));
    }
    for (const Permutation& p : q.generator_perms) {
      for (int x : p.images()) {
        auto u = static_cast<std::uint32_t>(x);
        for (int s = 24; s >= 0; s -= 8) q.canonical_key.push_back(static_cast<char>(u >> s));
      }
    }
    ++stats_.records;
    sink_(std::move(q));
  }

  const std::function<void(QuotientRecord&&)>& sink_;
  int ngens_;
  int ncols_;
  int cap_;
  const ActionOptions& options_;
  SearchStats& stats_;
  std::vector<int> table_;
  int ncosets_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<std::pair<int, int>>> by_column_;
  std::vector<std::vector<int>> stabilizer_;
  std::vector<std::vector<int>> movers_;
  std::vector<int> orbit_cols_;
  std::vector<int> orbit_;
  std::vector<char> mark_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<int, int>> queue_;
};

}  // namespace

void transitive_actions(const Presentation& pres, int max_degree, const ActionOptions& options,
                        const std::function<void(QuotientRecord&&)>& sink, SearchStats& stats) {
  if (max_degree < 1) throw Error("transitive_actions: max_degree must be at least 1");
  ActionSearch(pres, max_degree, options, sink, stats).run();
}

std::vector<QuotientRecord> transitive_actions(const Presentation& pres, int max_degree, const ActionOptions& options,
                                               SearchStats& stats) {
  std::vector<QuotientRecord> out;
  transitive_actions(pres, max_degree, options, [&](QuotientRecord&& q) { out.push_back(std::move(q)); }, stats);
  std::sort(out.begin(), out.end(), [](const QuotientRecord& a, const QuotientRecord& b) {
    return std::tie(a.degree, a.canonical_key) < std::tie(b.degree, b.canonical_key);
  });
  return out;
}

}  // namespace lat34
