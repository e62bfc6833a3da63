#include "lat34/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "lat34/errors.hpp"

namespace lat34 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int p : images_) {
    if (p < 0 || p >= degree() || seen[p]) throw Error("Permutation: images do not form a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images.at(cycle[i]) = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::power(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent) : exponent;
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (j != i) out << ',';
      out << j + 1;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation parse_cycles(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
    } else if (ch == '(') {
      if (open) throw ParseError("nested '(' in cycle notation");
      open = true;
      current.clear();
      ++i;
    } else if (ch == ')') {
      if (!open) throw ParseError("unbalanced ')' in cycle notation");
      open = false;
      if (!current.empty()) cycles.push_back(current);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!open) throw ParseError("point outside cycle");
      std::size_t end = i;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      int point = std::stoi(text.substr(i, end - i)) - 1;
      if (point < 0 || point >= degree) throw ParseError("cycle point out of range: " + text.substr(i, end - i));
      current.push_back(point);
      i = end;
    } else {
      throw ParseError(std::string("unexpected character in cycle notation: ") + ch);
    }
  }
  if (open) throw ParseError("unterminated cycle");
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace lat34
