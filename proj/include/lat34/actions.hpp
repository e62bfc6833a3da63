#pragma once

#include <vector>

#include "lat34/fpgroup.hpp"
#include "lat34/lins.hpp"

namespace lat34 {

struct ActionOptions {
  std::uint64_t node_budget = 1'000'000'000;
  // Words fixing point 0 in every action.
  std::vector<Word> stabilizer;
  // Words that must move point 0.
  std::vector<Word> movers;
  // The orbit of 0 under the group generated by orbit_words has exactly
  // orbit_size points (0 for no constraint).
  std::vector<Word> orbit_words;
  int orbit_size = 0;
  // Only degrees that are multiples of degree_step and >= min_degree are
  // emitted.
  int degree_step = 1;
  int min_degree = 1;
  std::function<void(const SearchStats&)> progress;
  std::uint64_t progress_every = 10'000'000;
};

// Every transitive action of the presented group on at most max_degree
// points (equivalently every subgroup of index <= max_degree) satisfying the
// constraints, as standardized coset tables turned into one permutation per
// generator. Point 0 is the coset of the subgroup. Each action is handed to
// `sink` as soon as it is found. Throws SearchBudgetExceeded.
void transitive_actions(const Presentation& pres, int max_degree, const ActionOptions& options,
                        const std::function<void(QuotientRecord&&)>& sink, SearchStats& stats);
// Collected and sorted by (degree, key).
std::vector<QuotientRecord> transitive_actions(const Presentation& pres, int max_degree,
                                               const ActionOptions& options, SearchStats& stats);

}  // namespace lat34
