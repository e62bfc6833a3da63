#include "lat34/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "lat34/errors.hpp"
#include "lat34/fpgroup.hpp"

namespace lat34 {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), BuildOptions{}) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, BuildOptions options)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error("PermGroup: generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  build(std::move(options.base_prefix), options.known_order);
}

int PermGroup::first_moved_point(const Permutation& g) const {
  for (int i = 0; i < degree_; ++i) {
    if (g[i] != i) return i;
  }
  return -1;
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.point] = Permutation::identity(degree_);
  level.orbit.push_back(level.point);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    int beta = level.orbit[i];
    for (const Permutation& x : level.gens) {
      int gamma = x[beta];
      if (!level.transversal[gamma]) {
        level.transversal[gamma] = *level.transversal[beta] * x;
        level.orbit.push_back(gamma);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    int beta = g[levels_[i].point];
    const auto& u = levels_[i].transversal[beta];
    if (!u) return {std::move(g), i};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build(std::vector<int> base_prefix, const std::optional<BigInt>& known_order) {
  levels_.clear();
  std::vector<char> in_base(degree_, 0);
  for (int p : base_prefix) {
    if (p < 0 || p >= degree_) throw Error("PermGroup: base point out of range");
    if (in_base[p]) continue;
    in_base[p] = 1;
    levels_.push_back(Level{p, {}, {}, {}});
  }
  for (const Permutation& g : generators_) {
    bool moves_base = false;
    for (const Level& l : levels_) {
      if (g[l.point] != l.point) {
        moves_base = true;
        break;
      }
    }
    if (!moves_base) {
      int p = first_moved_point(g);
      in_base[p] = 1;
      levels_.push_back(Level{p, {}, {}, {}});
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Permutation& g : generators_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[levels_[j].point] == levels_[j].point;
      if (fixes) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  auto current_order = [this] {
    BigInt o = 1;
    for (const Level& l : levels_) o *= l.orbit.size();
    return o;
  };
  auto done = [&] { return known_order && current_order() == *known_order; };

  if (!done()) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool added = false;
      Level& level = levels_[i];
      for (std::size_t k = 0; !added && k < level.orbit.size(); ++k) {
        int beta = level.orbit[k];
        for (std::size_t xi = 0; !added && xi < level.gens.size(); ++xi) {
          const Permutation& x = level.gens[xi];
          int gamma = x[beta];
          Permutation s = *level.transversal[beta] * x * level.transversal[gamma]->inverse();
          if (s.is_identity()) continue;
          auto [h, j] = strip(std::move(s), i + 1);
          if (h.is_identity()) continue;
          if (j == levels_.size()) levels_.push_back(Level{first_moved_point(h), {}, {}, {}});
          for (std::size_t l = i + 1; l <= j; ++l) {
            levels_[l].gens.push_back(h);
            rebuild_orbit(levels_[l]);
          }
          i = static_cast<std::ptrdiff_t>(j);
          added = true;
        }
      }
      if (added && done()) break;
      if (!added) --i;
    }
  }

  std::erase_if(levels_, [](const Level& l) { return l.orbit.size() == 1; });
  base_.clear();
  for (const Level& l : levels_) base_.push_back(l.point);
}

std::vector<int> PermGroup::basic_orbit_sizes() const {
  std::vector<int> out;
  for (const Level& l : levels_) out.push_back(static_cast<int>(l.orbit.size()));
  return out;
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const Level& l : levels_) o *= l.orbit.size();
  return o;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(g, 0).first.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> orb{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const Permutation& g : generators_) {
      int q = g[orb[i]];
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    out.push_back(orbit(p));
    for (int q : out.back()) seen[q] = 1;
  }
  return out;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  if (order() > cap) throw CapExceeded("group of order " + order().str() + " exceeds element cap " + std::to_string(cap));
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // g = t_{L-1} * ... * t_0 with t_i from the level-i transversal.
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[i].orbit.size());
    for (const Permutation& g : out) {
      for (int beta : levels_[i].orbit) next.push_back(g * *levels_[i].transversal[beta]);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PermGroup::to_string() const {
  std::ostringstream out;
  out << "Group([";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ", ";
    out << generators_[i].to_cycle_string();
  }
  out << "])";
  return out.str();
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points) {
  if (points.empty()) return g;
  std::vector<Permutation> strong;
  for (const auto& level : g.levels_) {
    for (const auto& x : level.gens) strong.push_back(x);
  }
  PermGroup rebased(g.degree(), strong, {points, g.order()});
  std::set<int> fixed(points.begin(), points.end());
  std::size_t k = 0;
  while (k < rebased.levels_.size() && fixed.count(rebased.levels_[k].point)) ++k;

  PermGroup out;
  out.degree_ = g.degree();
  out.levels_.assign(rebased.levels_.begin() + k, rebased.levels_.end());
  if (!out.levels_.empty()) out.generators_ = out.levels_.front().gens;
  for (const auto& l : out.levels_) out.base_.push_back(l.point);
  return out;
}

InducedAction induced_action(const PermGroup& g, const std::vector<int>& domain) {
  std::vector<int> position(g.degree(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) position.at(domain[i]) = static_cast<int>(i);
  std::vector<Permutation> images;
  for (const Permutation& x : g.generators()) {
    std::vector<int> img(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      int p = position[x[domain[i]]];
      if (p < 0) throw NotInvariant("induced_action: domain is not invariant under the group");
      img[i] = p;
    }
    images.emplace_back(std::move(img));
  }
  PermGroup image(static_cast<int>(domain.size()), std::move(images));
  BigInt kernel = g.order() / image.order();
  return {std::move(image), kernel};
}

GroupFingerprint fingerprint(const PermGroup& g) {
  constexpr std::size_t kCap = 10'000;
  std::vector<Permutation> elems = g.elements(kCap);
  GroupFingerprint fp;
  fp.order = elems.size();
  for (const Permutation& e : elems) ++fp.element_orders[e.order()];

  const auto& gens = g.generators();
  auto commutes_with_gens = [&](const Permutation& e) {
    return std::all_of(gens.begin(), gens.end(), [&](const Permutation& x) { return e * x == x * e; });
  };
  fp.abelian = std::all_of(gens.begin(), gens.end(), commutes_with_gens);
  fp.center_order = std::count_if(elems.begin(), elems.end(), commutes_with_gens);

  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  }
  PermGroup derived(g.degree(), comms);
  for (bool grew = true; grew;) {
    grew = false;
    for (const Permutation& c : std::vector<Permutation>(derived.generators())) {
      for (const Permutation& x : gens) {
        Permutation conj = x.inverse() * c * x;
        if (!derived.contains(conj)) {
          auto more = derived.generators();
          more.push_back(conj);
          derived = PermGroup(g.degree(), std::move(more));
          grew = true;
        }
      }
    }
  }
  fp.derived_order = static_cast<std::uint64_t>(derived.order());
  return fp;
}

const std::vector<CatalogueEntry>& group_catalogue() {
  static const std::vector<CatalogueEntry> catalogue = {
      {"1", "gens: a ; rels: a", {}},
      {"C_2", "gens: a ; rels: a^2", {"Z_2"}},
      {"C_3", "gens: a ; rels: a^3", {"Z_3"}},
      {"C_4", "gens: a ; rels: a^4", {"Z_4"}},
      {"C_2^2", "gens: a b ; rels: a^2 b^2 [a,b]", {"C_2xC_2", "Z_2^2"}},
      {"C_6", "gens: a ; rels: a^6", {}},
      {"C_8", "gens: a ; rels: a^8", {}},
      {"C_9", "gens: a ; rels: a^9", {}},
      {"C_3xC_3", "gens: a b ; rels: a^3 b^3 [a,b]", {}},
      {"S_3", "gens: a b ; rels: a^3 b^2 (a*b)^2", {}},
      {"D_4", "gens: a b ; rels: a^4 b^2 (a*b)^2", {}},
      {"Q", "gens: x y ; rels: x^4 x^2=y^2 x^y=x^-1", {}},
      {"C_4xC_2", "gens: a b ; rels: a^4 b^2 [a,b]", {"C_2xC_4"}},
      {"C_2^3", "gens: a b c ; rels: a^2 b^2 c^2 [a,b] [a,c] [b,c]", {"C_2xC_2xC_2"}},
      {"A_4", "gens: a b ; rels: a^3 b^2 (a*b)^3", {}},
      {"C_12", "gens: a ; rels: a^12", {}},
      {"C_2xS_3", "gens: a b ; rels: a^6 b^2 (a*b)^2", {"D_6"}},
      {"D_9", "gens: a b ; rels: a^9 b^2 (a*b)^2", {}},
      {"C_3xS_3", "gens: a c d ; rels: a^3 c^3 d^2 [a,c] [a,d] (c*d)^2", {"C_3:C_6"}},
      {"GenDih(C_3xC_3)", "gens: a b c ; rels: a^3 c^3 b^2 [a,c] (a*b)^2 (c*b)^2", {}},
      {"C_3xC_6", "gens: a b ; rels: a^3 b^6 [a,b]", {}},
      {"C_2xA_4", "gens: a b d ; rels: a^3 b^2 (a*b)^3 d^2 [a,d] [b,d]", {}},
      {"S_4", "gens: a b ; rels: a^4 b^2 (a*b)^3", {}},
      {"Q:C_3", "gens: r s t ; rels: r^2=s^3=t^3=r*s*t", {"SL(2,3)", "QxC_3"}},
      {"C_2xS_4", "gens: a b d ; rels: a^4 b^2 (a*b)^3 d^2 [a,d] [b,d]", {}},
      {"Q:S_3", "gens: a b ; rels: a^8 b^2 (a*b)^3 [a^4,b]", {"GL(2,3)", "QxS_3"}},
      {"S_3xS_3", "gens: a b c d ; rels: a^3 b^2 (a*b)^2 c^3 d^2 (c*d)^2 [a,c] [a,d] [b,c] [b,d]", {}},
  };
  return catalogue;
}

namespace {

const std::vector<GroupFingerprint>& catalogue_fingerprints() {
  static const std::vector<GroupFingerprint> fps = [] {
    std::vector<GroupFingerprint> out;
    for (const CatalogueEntry& e : group_catalogue()) {
      CosetTable t = coset_enumerate(parse_presentation(e.presentation), {});
      out.push_back(fingerprint(PermGroup(t.rows, table_to_perms(t))));
    }
    return out;
  }();
  return fps;
}

}  // namespace

std::optional<std::string> identify(const GroupFingerprint& fp) {
  const auto& fps = catalogue_fingerprints();
  std::optional<std::string> found;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    if (fps[i] == fp) {
      if (found) return std::nullopt;
      found = group_catalogue()[i].name;
    }
  }
  return found;
}

std::optional<std::string> canonical_group_name(const std::string& name) {
  for (const CatalogueEntry& e : group_catalogue()) {
    if (e.name == name) return e.name;
    for (const auto& a : e.aliases) {
      if (a == name) return e.name;
    }
  }
  return std::nullopt;
}

}  // namespace lat34
