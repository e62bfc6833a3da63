#include "lat34/amalgams.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lat34/errors.hpp"

namespace lat34 {
namespace {

std::vector<int> generator_indices(const Presentation& pres, const std::string& names) {
  std::istringstream in(names);
  std::vector<int> out;
  std::string name;
  while (in >> name) {
    int g = pres.index_of(name);
    if (g < 0) throw ParseError("unknown generator in subgroup list: " + name);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool supported_by(const Word& w, const std::vector<int>& gens) {
  return std::all_of(w.letters().begin(), w.letters().end(), [&](Letter l) {
    return std::binary_search(gens.begin(), gens.end(), generator_of(l));
  });
}

// Relators of `pres` over the generator subset, renumbered into it.
Presentation side_presentation(const Presentation& pres, const std::vector<int>& gens) {
  std::vector<std::string> names;
  std::map<int, int> local;
  for (int g : gens) {
    local[g] = static_cast<int>(names.size());
    names.push_back(pres.generator_names()[g]);
  }
  std::vector<Word> rels;
  for (const Word& r : pres.relators()) {
    if (!supported_by(r, gens)) continue;
    std::vector<Letter> ls;
    for (Letter l : r.letters()) ls.push_back(l > 0 ? local[generator_of(l)] + 1 : -(local[generator_of(l)] + 1));
    rels.emplace_back(std::move(ls));
  }
  return Presentation(std::move(names), std::move(rels));
}

std::vector<Word> as_words(const std::vector<int>& gens) {
  std::vector<Word> out;
  for (int g : gens) out.push_back(Word::generator(g));
  return out;
}

struct SideRep {
  std::vector<int> generators;      // universal indices
  std::vector<Permutation> images;  // one per side generator, regular action
  PermGroup group;
};

SideRep side_rep(const Amalgam& a, Side side) {
  const Presentation& pres = side == Side::L ? a.l_pres : a.r_pres;
  CosetTable t = coset_enumerate(pres, {}, {.max_cosets = 10'000});
  SideRep rep;
  rep.generators = side == Side::L ? a.l_generators : a.r_generators;
  rep.images = table_to_perms(t);
  rep.group = PermGroup(t.rows, rep.images);
  return rep;
}

Permutation eval_in(const SideRep& rep, const Word& universal_word) {
  Permutation p = Permutation::identity(rep.group.degree());
  for (Letter l : universal_word.letters()) {
    auto it = std::find(rep.generators.begin(), rep.generators.end(), generator_of(l));
    if (it == rep.generators.end()) throw Error("word leaves the side group");
    const Permutation& g = rep.images[it - rep.generators.begin()];
    p = p * (l > 0 ? g : g.inverse());
  }
  return p;
}

// Elements of the subgroup generated by `gens` with a word for each,
// breadth-first from the identity.
std::vector<std::pair<Permutation, Word>> words_for(const SideRep& rep, const std::vector<Word>& gens) {
  std::vector<Permutation> gperms;
  for (const Word& w : gens) gperms.push_back(eval_in(rep, w));
  std::vector<std::pair<Permutation, Word>> out{{Permutation::identity(rep.group.degree()), Word{}}};
  std::set<Permutation> seen{out[0].first};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation next = out[i].first * gperms[k];
      if (seen.insert(next).second) out.emplace_back(next, out[i].second * gens[k]);
    }
  }
  return out;
}

std::string type_name(const PermGroup& g) {
  auto name = identify(fingerprint(g));
  return name ? *name : "?";
}

}  // namespace

Amalgam make_amalgam(int id, const std::string& universal, const std::string& l_gens, const std::string& b_gens,
                     const std::string& r_gens, DeclaredOrders declared, std::string l_type, std::string b_type,
                     std::string r_type) {
  Amalgam a;
  a.id = id;
  a.universal = parse_presentation(universal);
  a.l_generators = generator_indices(a.universal, l_gens);
  a.r_generators = generator_indices(a.universal, r_gens);
  std::vector<int> b = generator_indices(a.universal, b_gens);
  a.l_words = as_words(a.l_generators);
  a.b_words = as_words(b);
  a.r_words = as_words(a.r_generators);
  a.l_pres = side_presentation(a.universal, a.l_generators);
  a.r_pres = side_presentation(a.universal, a.r_generators);
  for (const Word& r : a.universal.relators()) {
    if (!supported_by(r, a.l_generators) && !supported_by(r, a.r_generators)) {
      throw Error("amalgam " + std::to_string(id) + ": relator " + a.universal.word_to_string(r) +
                  " mixes L and R generators");
    }
  }
  a.declared = declared;
  a.l_type = std::move(l_type);
  a.b_type = std::move(b_type);
  a.r_type = std::move(r_type);
  return a;
}

namespace {

const char* kU6Tail = " b^2 c^3 x^2 y^2 a^3=c (a*b)^2 [x,y] (b*c)^2 x^c=y y^c=x*y x^b=y";

}  // namespace

const std::vector<Amalgam>& builtin_amalgams() {
  static const std::vector<Amalgam> all = [] {
    std::vector<Amalgam> v;
    v.push_back(make_amalgam(0, "gens: a c ; rels: a^3 c^4", "a", "", "c", {3, 1, 4}, "C_3", "1", "C_4"));
    v.push_back(make_amalgam(1, "gens: a x y ; rels: a^3 x^2 y^2 [x,y]", "a", "", "x y", {3, 1, 4}, "C_3", "1",
                             "C_2^2"));
    v.push_back(make_amalgam(2, "gens: a b c ; rels: a^3 b^2 c^4 [a,b] (b*c)^2", "a b", "b", "b c", {6, 2, 8},
                             "C_6", "C_2", "D_4"));
    v.push_back(make_amalgam(3, "gens: a b c ; rels: a^3 b^2 c^4 (a*b)^2 (b*c)^2", "a b", "b", "b c", {6, 2, 8},
                             "S_3", "C_2", "D_4"));
    v.push_back(make_amalgam(4, "gens: a c x y ; rels: a^9 c^3 x^2 y^2 a^3=c [x,y] x^c=y y^c=x*y", "a c", "c",
                             "c x y", {9, 3, 12}, "C_9", "C_3", "A_4"));
    v.push_back(make_amalgam(5, "gens: a c x y ; rels: a^3 c^3 x^2 y^2 [a,c] [x,y] x^c=y y^c=x*y", "a c", "c",
                             "c x y", {9, 3, 12}, "C_3xC_3", "C_3", "A_4"));
    v.push_back(make_amalgam(6, std::string("gens: a b c x y ; rels: a^9") + kU6Tail, "a b c", "b c", "b c x y",
                             {18, 6, 24}, "D_9", "S_3", "S_4"));
    v.push_back(make_amalgam(7,
                             "gens: a b c x y ; rels: a^3 b^2 c^3 x^2 y^2 [x,y] (b*c)^2 x^c=y y^c=x*y x^b=y "
                             "[a,c] (a*b)^2",
                             "a b c", "b c", "b c x y", {18, 6, 24}, "GenDih(C_3xC_3)", "S_3", "S_4"));
    v.push_back(make_amalgam(8,
                             "gens: a b c x y ; rels: a^3 b^2 c^3 x^2 y^2 [x,y] (b*c)^2 x^c=y y^c=x*y x^b=y "
                             "[a,c] [a,b]",
                             "a b c", "b c", "b c x y", {18, 6, 24}, "C_3:C_6", "S_3", "S_4"));
    v.push_back(make_amalgam(9, "gens: c d x y ; rels: c^3 d^2 x^2 y^2 (c*d)^2 [d,x] [d,y] [x,y]", "c d", "d",
                             "d x y", {6, 2, 8}, "S_3", "C_2", "C_2^3"));
    v.push_back(make_amalgam(10, "gens: c d x ; rels: c^3 d^2 x^4 (c*d)^2 [x,d]", "c d", "d", "d x", {6, 2, 8},
                             "S_3", "C_2", "C_2xC_4"));
    v.push_back(make_amalgam(11, "gens: c d x y ; rels: c^3 d^2 x^4 y^2 (c*d)^2 x^2=d [x,y]", "c d", "d", "d x y",
                             {6, 2, 8}, "S_3", "C_2", "C_2xC_4"));
    v.push_back(make_amalgam(12, "gens: c d x ; rels: c^3 d^2 x^8 (c*d)^2 x^4=d", "c d", "d", "d x", {6, 2, 8},
                             "S_3", "C_2", "C_8"));
    v.push_back(make_amalgam(13, "gens: c d x y ; rels: c^3 d^2 x^4 y^2 (c*d)^2 x^2=d (x*y)^2", "c d", "d",
                             "d x y", {6, 2, 8}, "S_3", "C_2", "D_4"));
    v.push_back(make_amalgam(14, "gens: c d x y ; rels: c^3 d^2 x^4 y^4 (c*d)^2 x^2=y^2=[x,y]=d", "c d", "d",
                             "d x y", {6, 2, 8}, "S_3", "C_2", "Q"));
    v.push_back(make_amalgam(15,
                             "gens: a c d x y ; rels: a^3 c^3 d^2 x^2 y^2 (d*c)^2 [a,c] [a,d] [d,x] [d,y] [x,y] "
                             "x^a=y y^a=x*y",
                             "a c d", "a d", "a d x y", {18, 6, 24}, "C_3xS_3", "C_6", "C_2xA_4"));
    v.push_back(make_amalgam(16,
                             "gens: a c d x y ; rels: a^3 c^3 d^2 x^4 y^4 (d*c)^2 [a,c] [a,d] x^2=y^2=[x,y]=d "
                             "x^a=y y^a=x*y",
                             "a c d", "a d", "a d x y", {18, 6, 24}, "C_3xS_3", "C_6", "QxC_3"));
    v.push_back(make_amalgam(17,
                             "gens: a b c d x y ; rels: a^3 b^2 c^3 d^2 x^2 y^2 (b*a)^2 (d*c)^2 [a,c] [a,d] "
                             "[b,c] [b,d] [x,d] [y,d] [x,y] x^a=y y^a=x*y x^b=x y^b=x*y",
                             "a b c d", "a b d", "a b d x y", {36, 12, 48}, "S_3xS_3", "C_2xS_3", "C_2xS_4"));
    v.push_back(make_amalgam(18,
                             "gens: a b c d x y ; rels: a^3 b^2 c^3 d^2 x^4 y^4 (b*a)^2 (d*c)^2 [a,c] [a,d] "
                             "[b,c] [b,d] x^2=y^2=[x,y]=d x^a=y y^a=x*y x^b=x^-1 y^b=y*x",
                             "a b c d", "a b d", "a b d x y", {36, 12, 48}, "S_3xS_3", "C_2xS_3", "QxS_3"));
    return v;
  }();
  return all;
}

Amalgam amalgam6_as_printed() {
  return make_amalgam(6, std::string("gens: a b c x y ; rels: a^3") + kU6Tail, "a b c", "b c", "b c x y",
                      {18, 6, 24}, "D_9", "S_3", "S_4");
}

PermGroup vertex_group(const Amalgam& a, Side side) { return side_rep(a, side).group; }

std::vector<Word> side_element_words(const Amalgam& a, Side side) {
  SideRep rep = side_rep(a, side);
  std::vector<Word> out;
  for (auto& [perm, word] : words_for(rep, side == Side::L ? a.l_words : a.r_words)) out.push_back(word);
  return out;
}

std::vector<Word> side_words_outside_b(const Amalgam& a, Side side) {
  SideRep rep = side_rep(a, side);
  std::set<Permutation> in_b;
  for (auto& [perm, word] : words_for(rep, a.b_words)) in_b.insert(perm);
  std::vector<Word> out;
  for (auto& [perm, word] : words_for(rep, side == Side::L ? a.l_words : a.r_words)) {
    if (!in_b.count(perm)) out.push_back(word);
  }
  return out;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << "amalgam " << id << ": |L|=" << computed.l << " |B|=" << computed.b << " |R|=" << computed.r << " L=" << l_type
      << " B=" << b_type << " R=" << r_type << " faithful=" << (faithful ? "yes" : "no")
      << " edge_kernel_trivial=" << (trivial_edge_kernel ? "yes" : "no") << ' '
      << (passed() ? "PASS" : "FAIL");
  for (const auto& d : discrepancies) out << " [" << d << ']';
  return out.str();
}

ValidationReport validate(const Amalgam& a) {
  ValidationReport rep;
  rep.id = a.id;
  auto fail = [&](std::string msg) { rep.discrepancies.push_back(std::move(msg)); };

  SideRep l = side_rep(a, Side::L);
  SideRep r = side_rep(a, Side::R);
  auto b_in_l = words_for(l, a.b_words);
  auto b_in_r = words_for(r, a.b_words);

  rep.computed = {static_cast<int>(l.group.order()), static_cast<int>(b_in_l.size()),
                  static_cast<int>(r.group.order())};
  if (rep.computed.l != a.declared.l) fail("|L| = " + std::to_string(rep.computed.l) + ", expected " + std::to_string(a.declared.l));
  if (rep.computed.b != a.declared.b) fail("|B| = " + std::to_string(rep.computed.b) + ", expected " + std::to_string(a.declared.b));
  if (rep.computed.r != a.declared.r) fail("|R| = " + std::to_string(rep.computed.r) + ", expected " + std::to_string(a.declared.r));
  if (rep.computed.l != 3 * rep.computed.b) fail("[L:B] != 3");
  if (rep.computed.r != 4 * rep.computed.b) fail("[R:B] != 4");
  if (b_in_r.size() != b_in_l.size()) fail("B has different orders inside L and R");

  // The word map B(L) -> B(R) must be an isomorphism for B to be a common
  // subgroup of both sides.
  bool iso = b_in_r.size() == b_in_l.size();
  for (std::size_t i = 0; iso && i < b_in_l.size(); ++i) {
    iso = eval_in(r, b_in_l[i].second) == b_in_r[i].first;
  }
  for (std::size_t i = 0; iso && i < b_in_l.size(); ++i) {
    for (std::size_t j = 0; iso && j < b_in_l.size(); ++j) {
      Word prod = b_in_l[i].second * b_in_l[j].second;
      auto k = std::find_if(b_in_l.begin(), b_in_l.end(),
                            [&](const auto& e) { return e.first == eval_in(l, prod); });
      iso = k != b_in_l.end() && b_in_r[k - b_in_l.begin()].first == eval_in(r, prod);
    }
  }
  if (!iso) fail("B generators do not define the same group in L and R");

  std::vector<Permutation> b_gens_l;
  for (const Word& w : a.b_words) b_gens_l.push_back(eval_in(l, w));
  PermGroup b_group(l.group.degree(), b_gens_l);
  rep.l_type = type_name(l.group);
  rep.b_type = type_name(b_group);
  rep.r_type = type_name(r.group);
  auto check_type = [&](const std::string& what, const std::string& got, const std::string& declared) {
    auto want = canonical_group_name(declared);
    if (!want) {
      fail(what + " declared type '" + declared + "' is not in the catalogue");
    } else if (got != *want) {
      fail(what + " identified as " + got + ", expected " + *want);
    }
  };
  check_type("L", rep.l_type, a.l_type);
  check_type("B", rep.b_type, a.b_type);
  check_type("R", rep.r_type, a.r_type);
  if (iso) {
    std::vector<Permutation> b_gens_r;
    for (const Word& w : a.b_words) b_gens_r.push_back(eval_in(r, w));
    if (type_name(PermGroup(r.group.degree(), b_gens_r)) != rep.b_type) fail("B identified differently inside R");
  }

  if (iso) {
    // Subgroups of B as sets of element indices (into b_in_l), by closing
    // the trivial subgroup under adjoining single elements.
    const std::size_t nb = b_in_l.size();
    auto index_of = [&](const Permutation& p) {
      for (std::size_t i = 0; i < nb; ++i) {
        if (b_in_l[i].first == p) return i;
      }
      throw Error("element outside B");
    };
    auto closure = [&](std::set<std::size_t> s) {
      std::vector<std::size_t> items(s.begin(), s.end());
      for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          for (auto [x, y] : {std::pair{items[i], items[j]}, std::pair{items[j], items[i]}}) {
            std::size_t k = index_of(b_in_l[x].first * b_in_l[y].first);
            if (s.insert(k).second) items.push_back(k);
          }
        }
      }
      return s;
    };
    std::set<std::set<std::size_t>> subgroups{{0}};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& h : std::vector<std::set<std::size_t>>(subgroups.begin(), subgroups.end())) {
        for (std::size_t g = 0; g < nb; ++g) {
          auto s = h;
          s.insert(g);
          if (subgroups.insert(closure(s)).second) grew = true;
        }
      }
    }
    auto normal_in = [&](const std::set<std::size_t>& h, const SideRep& side, bool use_r) {
      for (const Permutation& x : side.images) {
        for (std::size_t i : h) {
          const Permutation& elem = use_r ? b_in_r[i].first : b_in_l[i].first;
          Permutation conj = x.inverse() * elem * x;
          bool found = false;
          for (std::size_t j : h) {
            if ((use_r ? b_in_r[j].first : b_in_l[j].first) == conj) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
      return true;
    };
    rep.faithful = true;
    std::set<std::size_t> core_l{0}, core_r{0};
    for (const auto& h : subgroups) {
      bool nl = normal_in(h, l, false);
      bool nr = normal_in(h, r, true);
      if (nl && nr && h.size() > 1) rep.faithful = false;
      if (nl && h.size() > core_l.size()) core_l = h;
      if (nr && h.size() > core_r.size()) core_r = h;
    }
    std::vector<std::size_t> common;
    std::set_intersection(core_l.begin(), core_l.end(), core_r.begin(), core_r.end(), std::back_inserter(common));
    rep.trivial_edge_kernel = common.size() == 1;
    if (!rep.faithful) fail("not faithful: a nontrivial subgroup of B is normal in L and R");
    if (!rep.trivial_edge_kernel) fail("core_L(B) and core_R(B) intersect nontrivially");
  }
  return rep;
}

}  // namespace lat34
