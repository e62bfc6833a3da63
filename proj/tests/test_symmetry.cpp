#include "doctest.h"

#include <algorithm>
#include <random>

#include "lat34/errors.hpp"
#include "lat34/symmetry.hpp"
#include "oracles.hpp"

using namespace lat34;

namespace {

Graph shuffled(const Graph& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> left(g.n3()), right(g.n4());
  for (int i = 0; i < g.n3(); ++i) left[i] = i;
  for (int i = 0; i < g.n4(); ++i) right[i] = g.n3() + i;
  std::shuffle(left.begin(), left.end(), rng);
  std::shuffle(right.begin(), right.end(), rng);
  std::vector<int> perm(left);
  perm.insert(perm.end(), right.begin(), right.end());
  return g.relabeled(perm);
}

}  // namespace

TEST_CASE("automorphism group orders of fixtures") {
  CHECK(automorphism_group(fixture("K4")).order() == 24);
  CHECK(automorphism_group(fixture("K33")).order() == 72);
  CHECK(automorphism_group(fixture("Cube")).order() == 48);
  CHECK(automorphism_group(fixture("Petersen")).order() == 120);
  CHECK(automorphism_group(fixture("Heawood")).order() == 336);
  CHECK(automorphism_group(fixture("K34")).order() == 144);
}

TEST_CASE("K34 automorphisms: canonical search equals all 7! permutations") {
  Graph k34 = fixture("K34");
  CHECK(oracle::automorphisms_by_permutations(k34) == 144);
  CHECK(automorphism_group(k34).order() == 144);
}

TEST_CASE("canonical form is a complete invariant on relabelings") {
  for (const auto& name : fixture_names()) {
    Graph g = fixture(name);
    CanonicalForm cf = canonical_form(g);
    for (unsigned seed = 1; seed <= 5; ++seed) {
      Graph h = shuffled(g, seed);
      CHECK(canonical_form(h).bytes == cf.bytes);
      CHECK(are_isomorphic(g, h));
    }
    for (const Permutation& p : cf.generators) CHECK(is_automorphism(g, p));
    CHECK(canonical_graph(g) == canonical_graph(shuffled(g, 9)));
  }
  CHECK_FALSE(are_isomorphic(fixture("Cube"), fixture("K4")));
  CHECK_FALSE(are_isomorphic(fixture("Petersen"), fixture("Heawood")));
}

TEST_CASE("canonical bytes layout") {
  CanonicalForm cf = canonical_form(fixture("K34"));
  REQUIRE(cf.bytes.size() == 4 * (3 + 2 * 12));
  auto u32 = [&](int i) {
    return (static_cast<unsigned char>(cf.bytes[4 * i]) << 24) | (static_cast<unsigned char>(cf.bytes[4 * i + 1]) << 16) |
           (static_cast<unsigned char>(cf.bytes[4 * i + 2]) << 8) | static_cast<unsigned char>(cf.bytes[4 * i + 3]);
  };
  CHECK(u32(0) == 4);
  CHECK(u32(1) == 3);
  CHECK(u32(2) == 12);
}

TEST_CASE("symmetry report of K34") {
  SymmetryReport r = symmetry_report(fixture("K34"));
  CHECK(r.aut_order == 144);
  CHECK(r.local_action_v3 == "S_3");
  CHECK(r.local_action_v4 == "S_4");
  CHECK(r.s_v == 3);
  CHECK(r.s_u == 3);
  CHECK(r.edge_stab_order == 12);
  CHECK(r.edge_kernel_order == 1);
  CHECK(r.locally_arc_transitive);
  CHECK(r.edge_transitive);
  CHECK(r.aut_order == r.edge_stab_order * 12);
  CHECK_THROWS_AS(symmetry_report(fixture("K4")), NotBiregular);
}

TEST_CASE("factored orders") {
  CHECK(factored(1) == "1");
  CHECK(factored(2) == "2");
  CHECK(factored(12) == "2^2*3");
  CHECK(factored(BigInt(1) << 25) == "2^25");
  CHECK(factored(78) == "2*3*13");
}
