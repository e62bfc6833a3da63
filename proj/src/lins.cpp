#include "lat34/lins.hpp"

#include <algorithm>
#include <sstream>

namespace lat34 {
namespace {

constexpr int kUndef = -1;

std::string key_of(const std::vector<Permutation>& perms) {
  std::string key;
  for (const Permutation& p : perms) {
    for (int x : p.images()) {
      auto u = static_cast<std::uint32_t>(x);
      key.push_back(static_cast<char>(u >> 24));
      key.push_back(static_cast<char>(u >> 16));
      key.push_back(static_cast<char>(u >> 8));
      key.push_back(static_cast<char>(u));
    }
  }
  return key;
}

// Backtracking over partial coset tables of normal subgroups. Every entry
// chosen by a branch yields a word stabilizing coset 0; such words are
// scanned at every coset like relators, which keeps the table regular.
class NormalSearch {
 public:
  NormalSearch(const Presentation& pres, int max_index, const LinsOptions& options, SearchStats& stats)
      : ngens_(pres.generator_count()),
        ncols_(2 * pres.generator_count()),
        cap_(max_index),
        options_(options),
        stats_(stats),
        table_(static_cast<std::size_t>(max_index) * ncols_, kUndef),
        parent_(max_index, -1),
        parent_col_(max_index, -1),
        by_column_(ncols_) {
    for (const Word& r : pres.relators()) add_word_storage(r);
    for (const Word& w : options.nontrivial) {
      std::vector<int> cols;
      const Word reduced = w.reduced();
      for (Letter l : reduced.letters()) cols.push_back(column_of(l));
      nontrivial_.push_back(std::move(cols));
    }
  }

  std::vector<QuotientRecord> run() {
    ncosets_ = 1;
    bool ok = true;
    for (std::size_t r = 0; r < words_.size() && ok; ++r) ok = scan(0, r);
    ok = ok && process();
    if (ok && !nontrivial_dead()) search(0, 0);
    std::sort(results_.begin(), results_.end(), [](const QuotientRecord& a, const QuotientRecord& b) {
      return std::tie(a.degree, a.canonical_key) < std::tie(b.degree, b.canonical_key);
    });
    stats_.records = results_.size();
    return std::move(results_);
  }

 private:
  int& at(int c, int col) { return table_[static_cast<std::size_t>(c) * ncols_ + col]; }

  void add_word_storage(const Word& w) {
    std::vector<int> cols;
    for (Letter l : w.letters()) cols.push_back(column_of(l));
    const auto id = static_cast<int>(words_.size());
    for (std::size_t p = 0; p < cols.size(); ++p) by_column_[cols[p]].push_back({id, static_cast<int>(p)});
    words_.push_back(std::move(cols));
  }

  void remove_last_word() {
    const auto& cols = words_.back();
    for (int col : cols) by_column_[col].pop_back();
    words_.pop_back();
  }

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

  // Scans the cyclic word `id`, rotated to start at `offset`, from coset c.
  // Returns false on a contradiction.
  bool scan(int c, std::size_t id, int offset = 0) {
    const auto& w = words_[id];
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
        if (!scan(c, id, offset)) {
          queue_.clear();
          return false;
        }
      }
      int d = at(c, col);
      for (auto [id, offset] : by_column_[inverse_column(col)]) {
        if (!scan(d, id, offset)) {
          queue_.clear();
          return false;
        }
      }
    }
    return true;
  }

  bool nontrivial_dead() {
    for (const auto& w : nontrivial_) {
      int c = 0;
      for (int col : w) {
        c = at(c, col);
        if (c == kUndef) break;
      }
      if (c == 0) return true;
    }
    return false;
  }

  Word tree_word(int c) const {
    std::vector<Letter> letters;
    while (c != 0) {
      letters.push_back(letter_of_column(parent_col_[c]));
      c = parent_[c];
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
  }

  void tick(int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    stats_.max_cosets_reached = std::max(stats_.max_cosets_reached, ncosets_);
    stats_.records = results_.size();
    if (options_.progress && stats_.nodes % options_.progress_every == 0) options_.progress(stats_);
    if (stats_.nodes > options_.node_budget) {
      throw SearchBudgetExceeded("normal subgroup search exceeded node budget of " +
                                     std::to_string(options_.node_budget) + " (index bound " +
                                     std::to_string(cap_) + ")",
                                 stats_);
    }
  }

  // Branches on the first undefined entry at or after row-major position pos.
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
      Word relation = (tree_word(c) * Word{letter_of_column(col)} * tree_word(d).inverse()).cyclically_reduced();
      bool added = !relation.empty();
      bool ok = true;
      if (added) {
        add_word_storage(relation);
        for (int e = 0; e < ncosets_ && ok; ++e) ok = scan(e, words_.size() - 1);
      }
      ok = ok && process();
      if (ok && !nontrivial_dead()) search(pos + 1, depth + 1);
      queue_.clear();
      if (added) remove_last_word();
      undo_to(mark);
    }

    if (ncosets_ < cap_) {
      const int k = ncosets_++;
      parent_[k] = c;
      parent_col_[k] = col;
      set(c, col, k);
      if (process() && !nontrivial_dead()) search(pos + 1, depth + 1);
      queue_.clear();
      undo_to(mark);
      --ncosets_;
    }
  }

  // Restandardizes the table with coset `base` as the origin and compares it
  // with the current table; returns <0, 0, >0.
  int compare_relabeled(int base, std::vector<int>& number, std::vector<int>& order) {
    std::fill(number.begin(), number.begin() + ncosets_, kUndef);
    order.clear();
    order.push_back(base);
    number[base] = 0;
    for (int r = 0; r < ncosets_; ++r) {
      for (int col = 0; col < ncols_; ++col) {
        int d = at(order[r], col);
        if (number[d] == kUndef) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
        int mine = at(r, col);
        if (number[d] != mine) return number[d] < mine ? -1 : 1;
      }
    }
    return 0;
  }

  void accept() {
    if (ncosets_ < options_.min_index) return;
    // First-in-orbit test. For a normal subgroup every relabeling reproduces
    // the table; a smaller one means the table is not regular.
    std::vector<int> number(ncosets_), order;
    order.reserve(ncosets_);
    for (int base = 1; base < ncosets_; ++base) {
      if (compare_relabeled(base, number, order) != 0) return;
    }
    QuotientRecord q;
    q.degree = ncosets_;
    for (int g = 0; g < ngens_; ++g) {
      std::vector<int> images(ncosets_);
      for (int c = 0; c < ncosets_; ++c) images[c] = at(c, 2 * g);
      q.generator_perms.emplace_back(std::move(images));
    }
    q.canonical_key = key_of(q.generator_perms);
    results_.push_back(std::move(q));
  }

  int ngens_;
  int ncols_;
  int cap_;
  const LinsOptions& options_;
  SearchStats& stats_;
  std::vector<int> table_;
  int ncosets_ = 0;
  std::vector<int> parent_;
  std::vector<int> parent_col_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::pair<int, int>>> by_column_;
  std::vector<std::vector<int>> nontrivial_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<int, int>> queue_;
  std::vector<QuotientRecord> results_;
};

}  // namespace

std::vector<QuotientRecord> normal_quotients(const Presentation& pres, int max_index, const LinsOptions& options,
                                             SearchStats& stats) {
  if (max_index < 1) throw Error("normal_quotients: max_index must be at least 1");
  NormalSearch search(pres, max_index, options, stats);
  return search.run();
}

std::vector<QuotientRecord> normal_quotients(const Presentation& pres, int max_index, const LinsOptions& options) {
  SearchStats stats;
  return normal_quotients(pres, max_index, options, stats);
}

Permutation evaluate(const QuotientRecord& q, const Word& w) {
  Permutation p = Permutation::identity(q.degree);
  for (Letter l : w.letters()) {
    const Permutation& g = q.generator_perms.at(generator_of(l));
    p = p * (l > 0 ? g : g.inverse());
  }
  return p;
}

PermGroup image_subgroup(const QuotientRecord& q, const std::vector<Word>& words) {
  std::vector<Permutation> gens;
  for (const Word& w : words) gens.push_back(evaluate(q, w));
  return PermGroup(q.degree, std::move(gens));
}

std::string to_text(const QuotientRecord& q) {
  std::ostringstream out;
  out << q.degree << '\n';
  for (const Permutation& p : q.generator_perms) out << p.to_cycle_string() << '\n';
  return out.str();
}

QuotientRecord parse_quotient_record(const std::string& text) {
  std::istringstream in(text);
  QuotientRecord q;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("quotient record: missing degree");
  q.degree = std::stoi(line);
  if (q.degree < 1) throw ParseError("quotient record: degree must be positive");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    q.generator_perms.push_back(parse_cycles(q.degree, line));
  }
  q.canonical_key = key_of(q.generator_perms);
  return q;
}

}  // namespace lat34
