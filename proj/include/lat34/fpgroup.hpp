#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lat34/permutation.hpp"

namespace lat34 {

// Letters are signed, 1-based generator indices: +k is generator k-1 and -k
// its inverse.
using Letter = int;

inline int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }
// Coset-table column of a letter: 2g for a generator, 2g+1 for its inverse.
inline int column_of(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
inline int inverse_column(int col) { return col ^ 1; }
inline Letter letter_of_column(int col) { return (col & 1) ? -(col / 2 + 1) : col / 2 + 1; }

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  static Word generator(int g) { return Word{g + 1}; }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Cancels adjacent x x^-1 pairs. Idempotent.
  Word reduced() const;
  // Freely reduced and with no cancelling first/last pair.
  Word cyclically_reduced() const;
  Word inverse() const;
  Word power(int exponent) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// [x, y] = x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);
// x^y = y^-1 x y
Word conjugate(const Word& x, const Word& y);

class Presentation {
 public:
  Presentation() = default;
  // Relators are stored freely and cyclically reduced; empty ones are dropped.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  // -1 if absent.
  int index_of(std::string_view name) const;

  std::string word_to_string(const Word& w) const;
  // One-line text form, parseable by parse_presentation.
  std::string to_string() const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// Parses `gens: a b c ; rels: a^3 b^2 (a*b)^2 [a,c] a^3=c`.
//   [x,y]  is x^-1 y^-1 x y
//   x^y    is y^-1 x y when the exponent is a word
//   u=v    is u v^-1; chains u=v=w give u v^-1 and v w^-1
// Relators are separated by whitespace or top-level commas.
Presentation parse_presentation(std::string_view text);
Word parse_word(const Presentation& pres, std::string_view text);
// A single relation, possibly a chain, over the generators of `pres`.
std::vector<Word> parse_relation(const Presentation& pres, std::string_view text);

// Coset table over the cosets of a subgroup. Coset 0 is the subgroup itself;
// entry(c, col) is the coset reached from c by the column's letter, or -1.
struct CosetTable {
  int generator_count = 0;
  int rows = 0;
  std::vector<int> entries;  // rows * 2 * generator_count, row-major

  int columns() const { return 2 * generator_count; }
  int entry(int coset, int col) const { return entries[static_cast<std::size_t>(coset) * columns() + col]; }
  bool complete() const;
  // Image of coset under a word, or -1 if the trace runs off the table.
  int trace(int coset, const Word& w) const;
};

struct EnumerationOptions {
  std::int64_t max_cosets = 1'000'000;
};

// Todd-Coxeter coset enumeration (HLT with lookahead). The returned table is
// complete and standardized. Throws CapExceeded if more than max_cosets live
// cosets are needed.
CosetTable coset_enumerate(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                           EnumerationOptions options = {});
// Felsch-style strategy over the same input; used as an independent check of
// coset counts.
CosetTable coset_enumerate_felsch(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                                  EnumerationOptions options = {});

// One permutation of the cosets per generator. Throws IncompleteTable.
std::vector<Permutation> table_to_perms(const CosetTable& table);

// Invariant factors of the abelianization, 1s dropped, 0 for each infinite
// cyclic factor (listed last).
std::vector<std::int64_t> abelianization(const Presentation& pres);

// Smith normal form diagonal of an integer matrix (rows x cols), with the
// divisibility chain d1 | d2 | ... ; zeros included.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> matrix);

}  // namespace lat34
