#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lat34/permutation.hpp"

namespace lat34 {

using BigInt = boost::multiprecision::cpp_int;

// Permutation group stored as a base and strong generating set, built by
// deterministic Schreier-Sims. Immutable after construction.
class PermGroup {
 public:
  struct BuildOptions {
    // Points to put first in the base, in order.
    std::vector<int> base_prefix;
    // When the order is known in advance, sifting stops as soon as it is
    // reached.
    std::optional<BigInt> known_order;
  };

  PermGroup() = default;
  PermGroup(int degree, std::vector<Permutation> generators);
  PermGroup(int degree, std::vector<Permutation> generators, BuildOptions options);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  // Basic orbit sizes, one per base point.
  std::vector<int> basic_orbit_sizes() const;

  BigInt order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return base_.empty(); }

  // Sorted orbit of a point.
  std::vector<int> orbit(int point) const;
  // Orbits of the whole point set, each sorted, ordered by least point.
  std::vector<std::vector<int>> orbits() const;

  // All elements, sorted by image array. Throws CapExceeded if |G| > cap.
  std::vector<Permutation> elements(std::size_t cap) const;

  // Group printed as its generator list.
  std::string to_string() const;

 private:
  struct Level {
    int point;
    std::vector<Permutation> gens;
    // transversal[beta] maps `point` to beta (only for beta in the orbit).
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;
  };

  void build(std::vector<int> base_prefix, const std::optional<BigInt>& known_order);
  void rebuild_orbit(Level& level) const;
  // Sifts g from level `from` down; returns the residue and the level at
  // which it stopped (levels_.size() if it sifted through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  int first_moved_point(const Permutation& g) const;
  friend PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

// Subgroup fixing every listed point.
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points);

struct InducedAction {
  PermGroup image;  // acting on positions 0..|domain|-1
  BigInt kernel_order;
};

// Action on an invariant ordered subset of points. Throws NotInvariant.
InducedAction induced_action(const PermGroup& g, const std::vector<int>& domain);

// Isomorphism invariants used to name small groups.
struct GroupFingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // element order -> count
  std::uint64_t derived_order = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

// Requires |G| <= 10^4; throws CapExceeded otherwise.
GroupFingerprint fingerprint(const PermGroup& g);

struct CatalogueEntry {
  std::string name;
  std::string presentation;  // text form accepted by parse_presentation
  std::vector<std::string> aliases;
};

// The fixed list of groups that identify() can name.
const std::vector<CatalogueEntry>& group_catalogue();
// Catalogue name whose fingerprint equals fp, or nullopt when no entry (or
// more than one) matches.
std::optional<std::string> identify(const GroupFingerprint& fp);
// Canonical catalogue name for a name or alias, or nullopt.
std::optional<std::string> canonical_group_name(const std::string& name);

}  // namespace lat34
