#pragma once

#include <string>
#include <vector>

#include "lat34/fpgroup.hpp"
#include "lat34/perm_group.hpp"

namespace lat34 {

enum class Side { L, R };

struct DeclaredOrders {
  int l = 0, b = 0, r = 0;
  friend bool operator==(const DeclaredOrders&, const DeclaredOrders&) = default;
};

// One amalgam (L, B, R) of index (3, 4) together with its universal group.
// Subgroup generators are words over the universal group's generators.
struct Amalgam {
  int id = 0;
  Presentation universal;
  std::vector<Word> l_words, b_words, r_words;
  // Side presentations over the side's own generators (a subset of the
  // universal ones, in universal order).
  Presentation l_pres, r_pres;
  std::vector<int> l_generators, r_generators;  // universal generator indices
  DeclaredOrders declared;
  std::string l_type, b_type, r_type;
};

// Builds an amalgam from text: the universal presentation and the names of
// the L, B and R generators. Side presentations take the relators whose
// generators all belong to that side.
Amalgam make_amalgam(int id, const std::string& universal, const std::string& l_gens,
                     const std::string& b_gens, const std::string& r_gens, DeclaredOrders declared,
                     std::string l_type, std::string b_type, std::string r_type);

// The 19 amalgams. U_6 carries a^9 as its first relator.
const std::vector<Amalgam>& builtin_amalgams();
// U_6 with the relator a^3 exactly as printed, which collapses L_6.
Amalgam amalgam6_as_printed();

// Regular representation of a side group, on its own elements. Generator i
// of the result is the image of side generator i.
PermGroup vertex_group(const Amalgam& a, Side side);

struct ValidationReport {
  int id = 0;
  DeclaredOrders computed;
  std::string l_type, b_type, r_type;  // identified names, "?" when unknown
  bool faithful = false;
  bool trivial_edge_kernel = false;
  std::vector<std::string> discrepancies;

  bool passed() const { return discrepancies.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Amalgam& a);

// Every element of the side group as a word over the universal generators,
// identity first.
std::vector<Word> side_element_words(const Amalgam& a, Side side);
// Elements of the side group that lie outside B, as universal words.
std::vector<Word> side_words_outside_b(const Amalgam& a, Side side);

}  // namespace lat34
