#include "doctest.h"

#include "lat34/actions.hpp"
#include "lat34/amalgams.hpp"
#include "lat34/lins.hpp"
#include "oracles.hpp"

using namespace lat34;

TEST_CASE("normal subgroups of a cyclic group") {
  Presentation p = parse_presentation("gens: a ; rels: a^12");
  auto qs = normal_quotients(p, 100);
  std::vector<int> degrees;
  for (const auto& q : qs) degrees.push_back(q.degree);
  CHECK(degrees == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("normal quotients of S_4") {
  Presentation p = parse_presentation("gens: a b ; rels: a^4 b^2 (a*b)^3");
  auto qs = normal_quotients(p, 24);
  std::vector<int> degrees;
  for (const auto& q : qs) degrees.push_back(q.degree);
  CHECK(degrees == std::vector<int>{1, 2, 6, 24});
}

TEST_CASE("normal quotients of U_0 up to index 12 match regular-pair enumeration") {
  const Amalgam& u0 = builtin_amalgams()[0];
  auto qs = normal_quotients(u0.universal, 12);
  std::set<std::vector<std::vector<int>>> found;
  for (const auto& q : qs) {
    CHECK(found.insert(oracle::standardized(q.generator_perms)).second);
    for (const Word& r : u0.universal.relators()) CHECK(evaluate(q, r).is_identity());
  }
  CHECK(found == oracle::regular_pairs_u0(12));
}

TEST_CASE("quotient records are sorted and round-trip through text") {
  auto qs = normal_quotients(builtin_amalgams()[0].universal, 24);
  for (std::size_t i = 1; i < qs.size(); ++i) {
    CHECK(std::tie(qs[i - 1].degree, qs[i - 1].canonical_key) < std::tie(qs[i].degree, qs[i].canonical_key));
  }
  for (const auto& q : qs) {
    QuotientRecord back = parse_quotient_record(to_text(q));
    CHECK(back.degree == q.degree);
    CHECK(back.generator_perms == q.generator_perms);
  }
}

TEST_CASE("pruning words remove exactly the quotients where they die") {
  const Amalgam& u0 = builtin_amalgams()[0];
  LinsOptions o;
  for (const Word& w : side_element_words(u0, Side::L)) {
    if (!w.empty()) o.nontrivial.push_back(w);
  }
  for (const Word& w : side_element_words(u0, Side::R)) {
    if (!w.empty()) o.nontrivial.push_back(w);
  }
  auto pruned = normal_quotients(u0.universal, 48, o);
  std::size_t expected = 0;
  for (const auto& q : normal_quotients(u0.universal, 48)) {
    bool alive = true;
    for (const Word& w : o.nontrivial) alive = alive && !evaluate(q, w).is_identity();
    if (alive) ++expected;
  }
  CHECK(pruned.size() == expected);
  for (const auto& q : pruned) {
    for (const Word& w : o.nontrivial) CHECK_FALSE(evaluate(q, w).is_identity());
  }
}

TEST_CASE("node budget") {
  LinsOptions o;
  o.node_budget = 50;
  CHECK_THROWS_AS(normal_quotients(builtin_amalgams()[1].universal, 200, o), SearchBudgetExceeded);
}

TEST_CASE("transitive actions of S_3") {
  Presentation p = parse_presentation("gens: a b ; rels: a^3 b^2 (a*b)^2");
  SearchStats st;
  auto acts = transitive_actions(p, 6, {}, st);
  // Subgroups up to conjugacy with a standardized table per subgroup: the
  // whole group, A_3, three subgroups of order 2, the trivial subgroup.
  std::map<int, int> per_degree;
  for (const auto& q : acts) ++per_degree[q.degree];
  CHECK(per_degree == std::map<int, int>{{1, 1}, {2, 1}, {3, 3}, {6, 1}});
}
