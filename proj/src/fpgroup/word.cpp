#include <algorithm>
#include <sstream>

#include "lat34/errors.hpp"
#include "lat34/fpgroup.hpp"

namespace lat34 {

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {}
Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> w = reduced().letters_;
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.begin() + lo, w.begin() + hi));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::power(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  std::vector<Letter> out;
  int n = exponent < 0 ? -exponent : exponent;
  out.reserve(base.size() * n);
  for (int i = 0; i < n; ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out)).reduced();
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out)).reduced();
}

Word commutator(const Word& x, const Word& y) { return x.inverse() * y.inverse() * x * y; }

Word conjugate(const Word& x, const Word& y) { return y.inverse() * x * y; }

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ParseError("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ParseError("duplicate generator name: " + names_[i]);
    }
  }
  const int n = generator_count();
  for (const Word& r : relators) {
    for (Letter l : r.letters()) {
      if (l == 0 || generator_of(l) >= n) throw ParseError("relator letter out of range");
    }
    Word c = r.cyclically_reduced();
    if (!c.empty()) relators_.push_back(std::move(c));
  }
}

int Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int run = static_cast<int>(j - i);
    if (!first) out << '*';
    first = false;
    out << names_[generator_of(ls[i])];
    int exp = ls[i] > 0 ? run : -run;
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

std::string Presentation::to_string() const {
  std::ostringstream out;
  out << "gens:";
  for (const auto& n : names_) out << ' ' << n;
  out << " ; rels:";
  for (const auto& r : relators_) out << ' ' << word_to_string(r);
  return out.str();
}

bool CosetTable::complete() const {
  return std::find(entries.begin(), entries.end(), -1) == entries.end();
}

int CosetTable::trace(int coset, const Word& w) const {
  for (Letter l : w.letters()) {
    if (coset < 0) return -1;
    coset = entry(coset, column_of(l));
  }
  return coset;
}

}  // namespace lat34
