#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "lat34/amalgams.hpp"
#include "lat34/graph.hpp"
#include "lat34/lins.hpp"
#include "lat34/symmetry.hpp"

namespace lat34 {

// floor(12 * max_vertices * |B| / 7): the largest |G| whose coset graph can
// have at most max_vertices vertices.
int max_index_for(const Amalgam& a, int max_vertices);

// Quotients: every normal subgroup of index <= max_index_for, via LINS.
// Actions: transitive actions of U of degree 4k (k >= 2, 7k <= max_vertices)
// whose point stabiliser is im L, plus the quotients of order <= 12|B|,
// which give K_{3,4}.
enum class SearchMethod { Quotients, Actions };

std::string to_string(SearchMethod m);
SearchMethod default_method(const Amalgam& a);
// 4 * floor(max_vertices / 7).
int max_action_degree(int max_vertices);

struct Provenance {
  int amalgam = -1;
  BigInt group_order;  // |G|
  bool verified = false;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct CensusRecord {
  int n = 0;
  int i = 0;
  Graph graph;  // in canonical labeling
  std::string canonical_bytes;
  GraphStats stats;
  SymmetryReport sym;
  std::vector<Provenance> provenance;
  std::string comment;
};

struct CensusOptions {
  std::vector<int> amalgams;  // empty: all 19
  int max_vertices = 100;
  int jobs = 1;
  std::uint64_t node_budget = 2'000'000'000;
  double seconds_per_amalgam = 0;  // CPU seconds of the search thread; 0: unlimited
  // Per-amalgam override of default_method, indexed by amalgam id.
  std::vector<std::pair<int, SearchMethod>> methods;
  std::function<void(const std::string&)> log;
};

struct AmalgamOutcome {
  int amalgam = -1;
  SearchMethod method = SearchMethod::Quotients;
  bool completed = false;
  std::string failure;
  SearchStats stats;
  std::size_t candidates = 0;  // quotients or actions examined
  std::size_t graphs = 0;      // accepted coset graphs (before dedup)
  double seconds = 0;
};

struct CensusResult {
  std::vector<CensusRecord> records;  // sorted by (n, i)
  std::vector<AmalgamOutcome> outcomes;
  bool complete() const;
};

// Graphs of amalgams whose search exceeded a budget are withheld.
CensusResult run_census(const CensusOptions& options);

// Parameter tuple compared against the reference table: girth, diameter, worthy, local
// actions, s pair, |A_uv|, |A_uv^[1]| (orders in factored form).
using ParamTuple = std::tuple<int, int, bool, std::string, std::string, int, int, std::string, std::string>;

struct CensusRow {
  int n = 0;
  int i = 0;
  ParamTuple params;
  std::string comment;
};

CensusRow census_row(const CensusRecord& r);
// One-line report in the census CSV row format.
std::string csv_line(const CensusRow& row);
inline constexpr const char* kCsvHeader = "n,i,girth,diameter,worthy,act3,act4,s3,s4,edge_stab,edge_kernel,comment";
// Throws ParseError.
std::vector<CensusRow> parse_census_csv(const std::string& text);

// Row of the parameter table for a single graph (n, i = 0 when unknown).
CensusRow analyze_graph(const Graph& g, int index = 0);

// The 42 rows of the reference table of graphs on at most 100 vertices.
const std::vector<CensusRow>& reference_table();

struct ReferenceDiff {
  struct Entry {
    int n;
    ParamTuple params;
    int count;
  };
  std::vector<Entry> surplus;  // in the census, not in the table
  std::vector<Entry> deficit;  // in the table, not in the census
  bool empty() const { return surplus.empty() && deficit.empty(); }
  std::string report() const;
};

// Per-order multiset comparison restricted to orders <= max_order.
ReferenceDiff compare_reference(const std::vector<CensusRow>& rows, int max_order = 100);

// Comment tag: K34, D2(<name>) for a double of a named cubic graph, or a
// reference-table annotation keyed by parameter tuple.
std::string comment_for(const Graph& g, const ParamTuple& params, int n);

// Named connected cubic arc-transitive graphs used in comments.
const std::vector<std::pair<std::string, Graph>>& named_cubic_graphs();

// Writes lat34_n<n>_i<i>.graph per record, census.csv and provenance.csv.
// Throws IoError.
void emit(const std::vector<CensusRecord>& records, const std::string& out_dir);

}  // namespace lat34
