#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lat34/errors.hpp"
#include "lat34/fpgroup.hpp"
#include "lat34/perm_group.hpp"

namespace lat34 {

// A finite quotient G = U/N given by its regular action: points are the
// elements of G (cosets of N), point 0 is the identity.
struct QuotientRecord {
  int degree = 0;
  std::vector<Permutation> generator_perms;
  // Big-endian image bytes of the standardized table; orders records of equal
  // degree.
  std::string canonical_key;

  friend bool operator==(const QuotientRecord&, const QuotientRecord&) = default;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_cosets_reached = 0;
  int max_depth = 0;
  std::size_t records = 0;
};

class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(const std::string& what, SearchStats stats) : Error(what), stats_(stats) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

struct LinsOptions {
  std::uint64_t node_budget = 1'000'000'000;
  // Words that must stay nontrivial in every emitted quotient; branches in
  // which one of them is already trivial are cut. Empty for a plain search.
  std::vector<Word> nontrivial;
  // Only quotients of order >= min_index are emitted (staged bands).
  int min_index = 1;
  // Called every `progress_every` nodes, if set.
  std::function<void(const SearchStats&)> progress;
  std::uint64_t progress_every = 10'000'000;
};

// Every normal subgroup of index <= max_index, as its regular quotient
// action, sorted by (degree, canonical_key). Throws SearchBudgetExceeded.
std::vector<QuotientRecord> normal_quotients(const Presentation& pres, int max_index,
                                             const LinsOptions& options = {});
std::vector<QuotientRecord> normal_quotients(const Presentation& pres, int max_index,
                                             const LinsOptions& options, SearchStats& stats);

Permutation evaluate(const QuotientRecord& q, const Word& w);
PermGroup image_subgroup(const QuotientRecord& q, const std::vector<Word>& words);

// Text form: the degree on one line, then one generator image per line in
// cycle notation.
std::string to_text(const QuotientRecord& q);
QuotientRecord parse_quotient_record(const std::string& text);

}  // namespace lat34
