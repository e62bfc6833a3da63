#include "doctest.h"

#include "lat34/census.hpp"
#include "lat34/errors.hpp"
#include "lat34/graph.hpp"
#include "lat34/subdouble.hpp"
#include "oracles.hpp"

using namespace lat34;

TEST_CASE("fixture graphs") {
  struct Expect {
    const char* name;
    int vertices, edges, girth, diameter;
  };
  for (Expect e : {Expect{"K4", 4, 6, 3, 1}, Expect{"K33", 6, 9, 4, 2}, Expect{"Cube", 8, 12, 4, 3},
                   Expect{"Petersen", 10, 15, 5, 2}, Expect{"Heawood", 14, 21, 6, 3}, Expect{"K34", 7, 12, 4, 2}}) {
    Graph g = fixture(e.name);
    CHECK(g.vertex_count() == e.vertices);
    CHECK(g.edge_count() == e.edges);
    CHECK(girth(g) == e.girth);
    CHECK(diameter(g) == e.diameter);
  }
  CHECK(fixture("K34").biregular_34());
  CHECK(fixture("K34").split_bipartite());
  CHECK_THROWS_AS(fixture("Tutte"), UnknownName);
}

TEST_CASE("worthiness") {
  CHECK_FALSE(worthy(fixture("K34")));
  CHECK(worthy(fixture("Petersen")));
  CHECK_FALSE(worthy(subdivided_double(fixture("K4"))));
  CHECK(worthy(subdivision(fixture("K4"))));
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(Graph(2, 0, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, 0, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, 0, {{0, 2}}), Error);
}

TEST_CASE("stats of degenerate inputs") {
  Graph path(3, 0, {{0, 1}, {1, 2}});
  GraphStats st = graph_stats(path);
  CHECK_FALSE(st.girth.has_value());
  CHECK(st.diameter == 2);
  CHECK(st.valence_profile == std::map<int, int>{{1, 2}, {2, 1}});
  Graph split(4, 0, {{0, 1}, {2, 3}});
  CHECK_FALSE(graph_stats(split).connected);
  CHECK_FALSE(graph_stats(split).diameter.has_value());
  CHECK_THROWS_AS(diameter(split), DisconnectedInput);
}

TEST_CASE("LAT34 format round trip and errors") {
  Graph g = fixture("K34");
  std::string text = write_graph(g);
  CHECK(text.rfind("LAT34 1\nn3=4 n4=3 m=12\n", 0) == 0);
  CHECK(read_graph(text) == g);
  CHECK_THROWS_AS(read_graph("LAT34 2\nn3=1 n4=1 m=0\n"), ParseError);
  CHECK_THROWS_AS(read_graph("LAT34 1\nn3=2 n4=1 m=2\n0 2\n"), ParseError);
  CHECK_THROWS_AS(read_graph("LAT34 1\nn3=2 n4=1 m=1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/x.graph"), IoError);
}

TEST_CASE("relabeling") {
  Graph g = fixture("K34");
  std::vector<int> perm{3, 2, 1, 0, 6, 5, 4};
  Graph h = g.relabeled(perm);
  CHECK(h.edge_count() == g.edge_count());
  for (auto [u, v] : g.edges()) CHECK(h.adjacent(perm[u], perm[v]));
}

TEST_CASE("girth equals exhaustive cycle search on every graph with at most 40 edges") {
  std::vector<Graph> graphs;
  for (const auto& name : fixture_names()) graphs.push_back(fixture(name));
  for (const auto& [name, g] : named_cubic_graphs()) {
    graphs.push_back(g);
    graphs.push_back(subdivision(g));
    graphs.push_back(subdivided_double(g));
  }
  CensusOptions o;
  o.max_vertices = 21;
  for (const auto& r : run_census(o).records) graphs.push_back(r.graph);
  int checked = 0;
  for (const Graph& g : graphs) {
    if (g.edge_count() > 40) continue;
    ++checked;
    CHECK(girth(g) == oracle::girth_dfs(g));
  }
  CHECK(checked >= 20);
}
