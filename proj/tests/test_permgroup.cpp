#include "doctest.h"

#include "lat34/errors.hpp"
#include "lat34/fpgroup.hpp"
#include "lat34/perm_group.hpp"
#include "oracles.hpp"

using namespace lat34;

namespace {

PermGroup symmetric(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})});
}

}  // namespace

TEST_CASE("permutation arithmetic acts on the right") {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  // 0 -a-> 1 -b-> 2
  CHECK((a * b)[0] == 2);
  CHECK((a * b).order() == 3);
  CHECK((a * a).is_identity());
  CHECK(parse_cycles(5, "(1,2,3)(4,5)").to_cycle_string() == "(1,2,3)(4,5)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(parse_cycles(3, "(1,4)"), ParseError);
}

TEST_CASE("Schreier-Sims orders") {
  CHECK(symmetric(5).order() == 120);
  CHECK(symmetric(10).order() == BigInt(3628800));
  CHECK(PermGroup(6, {}).order() == 1);
  CHECK(PermGroup(6, {}).is_trivial());
  PermGroup s12 = symmetric(12);
  CHECK(s12.order() == BigInt("479001600"));
}

TEST_CASE("membership, orbits and stabilisers") {
  PermGroup s4 = symmetric(4);
  PermGroup a4(4, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(pointwise_stabilizer(s4, {0}).order() == 6);
  CHECK(pointwise_stabilizer(s4, {0, 1}).order() == 2);
  PermGroup two_orbits(5, {Permutation::from_cycles(5, {{0, 1}}), Permutation::from_cycles(5, {{2, 3, 4}})});
  CHECK(two_orbits.orbits().size() == 2);
  CHECK(two_orbits.orbit(3).size() == 3);
}

TEST_CASE("induced action and kernel") {
  // S_3 x S_3 acting on two triples; action on the first triple has
  // kernel of order 6.
  PermGroup g(6, {Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{0, 1, 2}}),
                  Permutation::from_cycles(6, {{3, 4}}), Permutation::from_cycles(6, {{3, 4, 5}})});
  InducedAction act = induced_action(g, {0, 1, 2});
  CHECK(act.image.order() == 6);
  CHECK(act.kernel_order == 6);
}

TEST_CASE("every catalogue group identifies as itself") {
  for (const CatalogueEntry& e : group_catalogue()) {
    Presentation p = parse_presentation(e.presentation);
    CosetTable t = coset_enumerate(p, {});
    PermGroup g(t.rows, table_to_perms(t));
    CHECK(g.order() == t.rows);
    CHECK(oracle::closure_size(g.generators(), t.rows) == static_cast<std::size_t>(t.rows));
    CHECK_MESSAGE(identify(fingerprint(g)) == e.name, e.name);
    for (const std::string& alias : e.aliases) CHECK(canonical_group_name(alias) == e.name);
  }
}

TEST_CASE("GL(2,3) fingerprint") {
  // GL(2,3) on the eight nonzero vectors of F_3^2.
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x || y) vecs.emplace_back(x, y);
    }
  }
  auto perm_of = [&](int a, int b, int c, int d) {
    std::vector<int> img;
    for (auto [x, y] : vecs) {
      std::pair<int, int> v{(a * x + b * y) % 3, (c * x + d * y) % 3};
      img.push_back(static_cast<int>(std::find(vecs.begin(), vecs.end(), v) - vecs.begin()));
    }
    return Permutation(img);
  };
  PermGroup gl(8, {perm_of(1, 1, 0, 1), perm_of(0, 1, 1, 0), perm_of(2, 0, 0, 1)});
  CHECK(gl.order() == 48);
  CHECK(identify(fingerprint(gl)) == "Q:S_3");
}
