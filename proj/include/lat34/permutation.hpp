#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lat34 {

// A bijection of {0, ..., degree-1}. Acts on the right: the image of point p
// under a*b is (p^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Order of the permutation as an element (lcm of cycle lengths).
  std::uint64_t order() const;
  Permutation power(long long exponent) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Cycle notation, points printed 1-based as in most group-theory systems,
  // e.g. "(1,2,3)(4,5)". The identity prints as "()".
  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

// Parses the output of Permutation::to_cycle_string back.
Permutation parse_cycles(int degree, const std::string& text);

}  // namespace lat34
