#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lat34/census.hpp"
#include "lat34/errors.hpp"

using namespace lat34;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::set<std::string> bytes_of(const CensusResult& r) {
  std::set<std::string> out;
  for (const auto& rec : r.records) out.insert(rec.canonical_bytes);
  return out;
}

std::vector<CensusRow> rows_of(const CensusResult& r) {
  std::vector<CensusRow> out;
  for (const auto& rec : r.records) out.push_back(census_row(rec));
  return out;
}

}  // namespace

TEST_CASE("max_index_for") {
  const auto& all = builtin_amalgams();
  CHECK(max_index_for(all[17], 350) == 7200);
  CHECK(max_index_for(all[0], 7) == 12);
  CHECK(max_index_for(all[2], 100) == 342);
  CHECK(max_action_degree(100) == 56);
  CHECK(max_action_degree(350) == 200);
}

TEST_CASE("reference table fixture") {
  const auto& rows = reference_table();
  CHECK(rows.size() == 42);
  std::map<int, int> per_order;
  for (const auto& r : rows) ++per_order[r.n];
  CHECK(per_order == std::map<int, int>{{7, 1},  {14, 2}, {21, 2}, {28, 3}, {35, 2}, {42, 2}, {49, 3},
                                        {56, 5}, {63, 4}, {70, 3}, {84, 4}, {91, 2}, {98, 9}});
  CHECK(compare_reference(rows).empty());
  std::vector<CensusRow> short_rows(rows.begin() + 1, rows.end());
  ReferenceDiff d = compare_reference(short_rows);
  REQUIRE(d.deficit.size() == 1);
  CHECK(d.deficit[0].n == 7);
  CHECK(d.surplus.empty());
}

TEST_CASE("census at 7 vertices is K34") {
  CensusOptions o;
  o.max_vertices = 7;
  CensusResult r = run_census(o);
  REQUIRE(r.records.size() == 1);
  CHECK(r.complete());
  const CensusRecord& k = r.records[0];
  CHECK(k.n == 7);
  CHECK(k.i == 1);
  CHECK(k.comment == "K34");
  CHECK(census_row(k).params == reference_table()[0].params);
}

TEST_CASE("census at 14 vertices reproduces the table rows") {
  CensusOptions o;
  o.max_vertices = 14;
  CensusResult r = run_census(o);
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].n == 7);
  CHECK(r.records[1].n == 14);
  CHECK(r.records[2].n == 14);
  CHECK(compare_reference(rows_of(r), 14).empty());
}

TEST_CASE("census invariants at 35 vertices") {
  CensusOptions o;
  o.max_vertices = 35;
  CensusResult r = run_census(o);
  CHECK(r.complete());
  std::set<std::string> seen;
  int prev_n = 0, prev_i = 0;
  for (const auto& rec : r.records) {
    CHECK(seen.insert(rec.canonical_bytes).second);
    CHECK(rec.graph.vertex_count() == rec.n);
    CHECK(rec.graph.edge_count() <= 12 * o.max_vertices / 7);
    CHECK(rec.graph.biregular_34());
    CHECK(rec.graph.connected());
    CHECK(rec.sym.locally_arc_transitive);
    CHECK(rec.sym.aut_order == rec.sym.edge_stab_order * rec.graph.edge_count());
    CHECK(rec.i == (rec.n == prev_n ? prev_i + 1 : 1));
    prev_n = rec.n;
    prev_i = rec.i;
    REQUIRE_FALSE(rec.provenance.empty());
    for (const auto& p : rec.provenance) CHECK(p.verified);
  }
}

TEST_CASE("ablating one amalgam never changes surviving records") {
  CensusOptions o;
  o.max_vertices = 21;
  CensusResult full = run_census(o);
  std::map<std::string, CensusRow> by_bytes;
  for (const auto& rec : full.records) by_bytes[rec.canonical_bytes] = census_row(rec);
  for (int drop = 0; drop < 19; ++drop) {
    CensusOptions a = o;
    for (int id = 0; id < 19; ++id) {
      if (id != drop) a.amalgams.push_back(id);
    }
    CensusResult part = run_census(a);
    CHECK(part.records.size() <= full.records.size());
    for (const auto& rec : part.records) {
      REQUIRE(by_bytes.count(rec.canonical_bytes));
      CHECK(by_bytes[rec.canonical_bytes].params == census_row(rec).params);
    }
  }
}

TEST_CASE("action search and normal quotients find the same graphs") {
  for (auto [id, bound] : {std::pair{2, 35}, std::pair{7, 56}, std::pair{15, 56}, std::pair{17, 56}}) {
    CensusOptions o;
    o.max_vertices = bound;
    o.amalgams = {id};
    o.methods = {{id, SearchMethod::Quotients}};
    CensusResult q = run_census(o);
    o.methods = {{id, SearchMethod::Actions}};
    CensusResult a = run_census(o);
    CHECK_MESSAGE(bytes_of(q) == bytes_of(a), "amalgam " << id);
    CHECK_FALSE(q.records.empty());
  }
}

TEST_CASE("budget exceeded withholds the amalgam's graphs") {
  CensusOptions o;
  o.max_vertices = 56;
  o.amalgams = {1, 2};
  o.node_budget = 2000;
  CensusResult r = run_census(o);
  CHECK_FALSE(r.complete());
  for (const auto& oc : r.outcomes) CHECK_FALSE(oc.completed);
  CHECK(r.records.empty());
}

TEST_CASE("emit writes graph files and a CSV that parses back") {
  namespace fs = std::filesystem;
  CensusOptions o;
  o.max_vertices = 7;
  CensusResult r = run_census(o);
  fs::path dir = fs::temp_directory_path() / "lat34_emit_test";
  fs::remove_all(dir);
  emit(r.records, dir.string());
  CHECK(fs::exists(dir / "lat34_n7_i1.graph"));
  std::string csv = slurp(dir / "census.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  auto rows = parse_census_csv(csv);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].params == census_row(r.records[0]).params);
  CHECK(rows[0].comment == "K34");
  CHECK(read_graph_file((dir / "lat34_n7_i1.graph").string()) == r.records[0].graph);
  std::string first = slurp(dir / "census.csv");
  emit(r.records, dir.string());
  CHECK(slurp(dir / "census.csv") == first);
  fs::remove_all(dir);
  CHECK_THROWS_AS(parse_census_csv("n,i\n"), ParseError);
  CHECK_THROWS_AS(parse_census_csv(std::string(kCsvHeader) + "\n7,1,x,2,no,S_3,S_4,3,3,12,1,\n"), ParseError);
}

TEST_CASE("analyze_graph on K34") {
  CensusRow row = analyze_graph(fixture("K34"));
  CHECK(csv_line(row) == "7,0,4,2,no,S_3,S_4,3,3,2^2*3,1,K34");
}
