#include "lat34/census.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "lat34/actions.hpp"
#include "lat34/coset_graph.hpp"
#include "lat34/subdouble.hpp"

namespace lat34 {
namespace {

const char* kReferenceCsv = R"(n,i,girth,diameter,worthy,act3,act4,s3,s4,edge_stab,edge_kernel,comment
7,1,4,2,no,S_3,S_4,3,3,2^2*3,1,K34
14,1,4,4,no,S_3,D_4,1,2,2^4,2^2,D2(K4)
14,2,4,4,yes,S_3,D_4,1,2,2,1,cube point-side incidence
21,1,4,4,no,S_3,D_4,1,2,2^7,2^3,D2(K33)
21,2,6,4,yes,S_3,S_4,3,4,2^2*3,1,affine plane over Z_3
28,1,4,6,no,S_3,D_4,1,2,2^8,2^6,D2(Q3)
28,2,6,4,yes,S_3,D_4,1,2,2^2,1,(12_4; 16_3) configuration
28,3,6,4,yes,S_3,S_4,3,3,2^2*3,1,Reye configuration
35,1,4,6,no,S_3,D_4,1,2,2^11,2^9,D2(Pet)
35,2,6,6,yes,S_3,S_4,3,3,2^2*3,1,
42,1,6,4,yes,S_3,D_4,1,2,2^4,2^2,
42,2,6,4,yes,S_3,D_4,1,2,2^4,2^2,
49,1,4,6,no,S_3,D_4,1,2,2^16,2^14,D2(F014)
49,2,6,6,yes,S_3,D_4,1,2,2,1,
49,3,6,5,yes,S_3,D_4,1,2,2^2,1,
56,1,4,8,no,S_3,D_4,1,2,2^16,2^14,D2(F016)
56,2,6,6,yes,S_3,D_4,1,2,2,1,
56,3,6,6,yes,S_3,D_4,1,2,2^4,2^2,
56,4,8,6,yes,S_3,S_4,3,3,2^2*3,1,
56,5,6,6,yes,S_3,D_4,1,2,2^2,1,
63,1,4,8,no,S_3,D_4,1,2,2^19,2^17,D2(F018)
63,2,8,6,yes,S_3,S_4,3,3,2^2*3,1,
63,3,8,6,yes,S_3,D_4,1,2,2,1,
63,4,8,6,yes,S_3,S_4,3,4,2^2*3,1,
70,1,4,10,no,S_3,D_4,1,2,2^20,2^18,D2(F020A)
70,2,4,10,no,S_3,D_4,1,2,2^21,2^19,D2(F020B)
70,3,8,6,yes,S_3,S_4,3,3,2^2*3,1,
84,1,4,8,no,S_3,D_4,1,2,2^24,2^22,D2(F024)
84,2,8,6,yes,S_3,D_4,1,2,2,1,
84,3,8,6,yes,S_3,C_2^2,1,2,2,1,
84,4,6,8,yes,S_3,D_4,1,2,2^3,2,
91,1,4,10,no,C_3,D_4,1,1,2^25,2^24,D2(F026)
91,2,8,6,yes,C_3,C_4,1,1,1,1,
98,1,4,10,no,S_3,D_4,1,2,2^29,2^27,D2(F028)
98,2,6,6,yes,S_3,D_4,1,2,2,1,
98,3,6,8,yes,S_3,D_4,1,2,2,1,
98,4,8,6,yes,S_3,D_4,1,2,2,1,
98,5,6,6,yes,S_3,D_4,1,2,2^9,2^7,
98,6,6,6,yes,S_3,D_4,1,2,2^9,2^7,
98,7,6,6,yes,S_3,D_4,1,2,2,1,
98,8,8,6,yes,S_3,D_4,1,2,2^2,1,
98,9,6,6,yes,S_3,C_2^2,1,2,2,1,
)";

Graph lcf(int n, const std::vector<int>& pattern) {
  std::set<Graph::Edge> edges;
  auto add = [&](int u, int v) { edges.emplace(std::min(u, v), std::max(u, v)); };
  for (int i = 0; i < n; ++i) {
    add(i, (i + 1) % n);
    add(i, ((i + pattern[i % pattern.size()]) % n + n) % n);
  }
  return Graph(n, 0, std::vector<Graph::Edge>(edges.begin(), edges.end()));
}

// Three-element subsets of a 7-set that are not lines of the Fano plane,
// adjacent when disjoint.
Graph coxeter_graph() {
  std::set<std::vector<int>> lines;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> l{i, (i + 1) % 7, (i + 3) % 7};
    std::sort(l.begin(), l.end());
    lines.insert(l);
  }
  std::vector<std::vector<int>> verts;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      for (int c = b + 1; c < 7; ++c) {
        if (!lines.count({a, b, c})) verts.push_back({a, b, c});
      }
    }
  }
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(),
                            std::back_inserter(meet));
      if (meet.empty()) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph(static_cast<int>(verts.size()), 0, edges);
}

const std::map<std::string, std::string>& named_cubic_bytes() {
  static const std::map<std::string, std::string> bytes = [] {
    std::map<std::string, std::string> out;
    for (const auto& [name, g] : named_cubic_graphs()) out.emplace(canonical_form(g).bytes, name);
    return out;
  }();
  return bytes;
}

ParamTuple params_of(const GraphStats& st, const SymmetryReport& sym) {
  return {st.girth.value_or(0),   st.diameter.value_or(0), st.worthy,
          sym.local_action_v3,    sym.local_action_v4,     sym.s_v,
          sym.s_u,                factored(sym.edge_stab_order), factored(sym.edge_kernel_order)};
}

std::string tuple_text(const ParamTuple& p) {
  std::ostringstream out;
  out << "(" << std::get<0>(p) << ", " << std::get<1>(p) << ", " << (std::get<2>(p) ? "yes" : "no") << ", ("
      << std::get<3>(p) << ", " << std::get<4>(p) << "), (" << std::get<5>(p) << ", " << std::get<6>(p) << "), "
      << std::get<7>(p) << ", " << std::get<8>(p) << ")";
  return out.str();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (fields.size() < 11 && std::getline(in, field, ',')) fields.push_back(field);
  std::string rest;
  std::getline(in, rest);
  fields.push_back(rest);
  return fields;
}

int to_int(const std::string& s, const std::string& line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad integer '" + s + "' in census row: " + line);
}

struct Candidate {
  std::string bytes;
  Graph graph;
  std::vector<Provenance> provenance;
};

// Budget in CPU seconds of the calling thread.
class Deadline {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(now()) {}
  double elapsed() const { return now() - start_; }
  void check(const SearchStats& stats) const {
    if (seconds_ > 0 && elapsed() > seconds_) {
      throw SearchBudgetExceeded("time budget of " + std::to_string(seconds_) + " s exceeded", stats);
    }
  }

 private:
  static double now() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
  }
  double seconds_;
  double start_;
};

void add_candidate(std::map<std::string, Candidate>& found, const CosetGraph& cg, int amalgam,
                   const BigInt& order) {
  Provenance prov{amalgam, order, verify_action(cg, order)};
  CanonicalForm cf = canonical_form(cg.graph);
  auto it = found.find(cf.bytes);
  if (it == found.end()) {
    found.emplace(cf.bytes, Candidate{cf.bytes, cg.graph.relabeled(cf.labeling), {prov}});
    return;
  }
  auto& list = it->second.provenance;
  auto same = std::find_if(list.begin(), list.end(), [&](const Provenance& p) { return p.group_order == order; });
  if (same == list.end()) {
    list.push_back(prov);
  } else {
    same->verified = same->verified && prov.verified;
  }
}

std::vector<Candidate> search_amalgam(const Amalgam& a, const CensusOptions& options, SearchMethod method,
                                      AmalgamOutcome& outcome) {
  Deadline deadline(options.seconds_per_amalgam);
  std::map<std::string, Candidate> found;

  LinsOptions lo;
  lo.node_budget = options.node_budget;
  for (const Word& w : side_element_words(a, Side::L)) {
    if (!w.letters().empty()) lo.nontrivial.push_back(w);
  }
  for (const Word& w : side_element_words(a, Side::R)) {
    if (!w.letters().empty()) lo.nontrivial.push_back(w);
  }
  if (options.seconds_per_amalgam > 0) {
    lo.progress = [&](const SearchStats& s) { deadline.check(s); };
    lo.progress_every = 20'000;
  }

  int max_index = max_index_for(a, options.max_vertices);
  if (method == SearchMethod::Actions) max_index = std::min(max_index, 12 * a.declared.b);
  SearchStats qs;
  for (const QuotientRecord& q : normal_quotients(a.universal, max_index, lo, qs)) {
    ++outcome.candidates;
    auto r = coset_graph_with_action(q, a);
    if (auto* cg = std::get_if<CosetGraph>(&r)) {
      if (cg->graph.vertex_count() > options.max_vertices) continue;
      ++outcome.graphs;
      add_candidate(found, *cg, a.id, BigInt(q.degree));
    }
  }
  outcome.stats = qs;

  if (method == SearchMethod::Actions && options.max_vertices >= 14) {
    ActionOptions ao;
    ao.node_budget = options.node_budget;
    ao.stabilizer = a.l_words;
    ao.movers = side_words_outside_b(a, Side::R);
    ao.orbit_words = a.r_words;
    ao.orbit_size = 4;
    ao.degree_step = 4;
    ao.min_degree = 8;
    if (options.seconds_per_amalgam > 0) {
      ao.progress = [&](const SearchStats& s) { deadline.check(s); };
      ao.progress_every = 20'000;
    }
    SearchStats as;
    transitive_actions(
        a.universal, max_action_degree(options.max_vertices), ao,
        [&](QuotientRecord&& q) {
          ++outcome.candidates;
          auto r = action_coset_graph(q, a);
          if (auto* cg = std::get_if<CosetGraph>(&r)) {
            ++outcome.graphs;
            add_candidate(found, *cg, a.id, BigInt(q.degree) * a.declared.l);
          }
        },
        as);
    outcome.stats.nodes += as.nodes;
    outcome.stats.records += as.records;
    outcome.stats.max_depth = std::max(outcome.stats.max_depth, as.max_depth);
    outcome.stats.max_cosets_reached = std::max(outcome.stats.max_cosets_reached, as.max_cosets_reached);
  }
  outcome.seconds = deadline.elapsed();

  std::vector<Candidate> out;
  for (auto& [bytes, c] : found) out.push_back(std::move(c));
  return out;
}

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  std::size_t threads = std::min<std::size_t>(std::max(jobs, 1), count);
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

int max_index_for(const Amalgam& a, int max_vertices) {
  return static_cast<int>(12LL * max_vertices * a.declared.b / 7);
}

int max_action_degree(int max_vertices) { return 4 * (max_vertices / 7); }

std::string to_string(SearchMethod m) { return m == SearchMethod::Quotients ? "quotients" : "actions"; }

SearchMethod default_method(const Amalgam& a) {
  return a.declared.b >= 12 ? SearchMethod::Actions : SearchMethod::Quotients;
}

bool CensusResult::complete() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const AmalgamOutcome& o) { return o.completed; });
}

CensusResult run_census(const CensusOptions& options) {
  std::vector<int> ids = options.amalgams;
  if (ids.empty()) {
    for (const Amalgam& a : builtin_amalgams()) ids.push_back(a.id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (id < 0 || id >= static_cast<int>(builtin_amalgams().size())) {
      throw UnknownName("no amalgam " + std::to_string(id));
    }
  }
  if (options.max_vertices < 7) throw Error("max_vertices must be at least 7");

  std::mutex log_mutex;
  auto log = [&](const std::string& msg) {
    if (!options.log) return;
    std::lock_guard<std::mutex> lock(log_mutex);
    options.log(msg);
  };

  CensusResult result;
  result.outcomes.resize(ids.size());
  std::vector<std::vector<Candidate>> found(ids.size());
  parallel_for(ids.size(), options.jobs, [&](std::size_t k) {
    const Amalgam& a = builtin_amalgams()[ids[k]];
    SearchMethod method = default_method(a);
    for (const auto& [id, m] : options.methods) {
      if (id == a.id) method = m;
    }
    AmalgamOutcome& out = result.outcomes[k];
    out.amalgam = a.id;
    out.method = method;
    try {
      found[k] = search_amalgam(a, options, method, out);
      out.completed = true;
      log("U" + std::to_string(a.id) + " " + to_string(method) + ": " + std::to_string(out.candidates) +
          " candidates, " + std::to_string(out.graphs) + " graphs, " + std::to_string(found[k].size()) +
          " distinct, " + std::to_string(out.stats.nodes) + " nodes");
    } catch (const SearchBudgetExceeded& e) {
      out.completed = false;
      out.failure = e.what();
      out.stats = e.stats();
      found[k].clear();
      log("U" + std::to_string(a.id) + " " + to_string(method) + ": budget exceeded (" + e.what() + ") after " +
          std::to_string(e.stats().nodes) + " nodes, " + std::to_string(e.stats().records) + " records");
    }
  });

  std::map<std::string, CensusRecord> merged;
  for (auto& list : found) {
    for (Candidate& c : list) {
      auto [it, fresh] = merged.try_emplace(c.bytes);
      if (fresh) {
        it->second.graph = std::move(c.graph);
        it->second.canonical_bytes = c.bytes;
        it->second.n = it->second.graph.vertex_count();
      }
      for (Provenance& p : c.provenance) it->second.provenance.push_back(p);
    }
  }
  for (auto& [bytes, r] : merged) result.records.push_back(std::move(r));
  std::sort(result.records.begin(), result.records.end(), [](const CensusRecord& x, const CensusRecord& y) {
    return std::tie(x.n, x.canonical_bytes) < std::tie(y.n, y.canonical_bytes);
  });
  for (std::size_t k = 0; k < result.records.size(); ++k) {
    CensusRecord& r = result.records[k];
    r.i = (k > 0 && result.records[k - 1].n == r.n) ? result.records[k - 1].i + 1 : 1;
    std::sort(r.provenance.begin(), r.provenance.end(), [](const Provenance& x, const Provenance& y) {
      return std::tie(x.amalgam, x.group_order) < std::tie(y.amalgam, y.group_order);
    });
  }

  parallel_for(result.records.size(), options.jobs, [&](std::size_t k) {
    CensusRecord& r = result.records[k];
    r.stats = graph_stats(r.graph);
    r.sym = symmetry_report(r.graph);
    r.comment = comment_for(r.graph, params_of(r.stats, r.sym), r.n);
  });
  log("census: " + std::to_string(result.records.size()) + " graphs");
  return result;
}

CensusRow census_row(const CensusRecord& r) { return {r.n, r.i, params_of(r.stats, r.sym), r.comment}; }

std::string csv_line(const CensusRow& row) {
  const ParamTuple& p = row.params;
  std::ostringstream out;
  out << row.n << ',' << row.i << ',' << std::get<0>(p) << ',' << std::get<1>(p) << ','
      << (std::get<2>(p) ? "yes" : "no") << ',' << std::get<3>(p) << ',' << std::get<4>(p) << ',' << std::get<5>(p)
      << ',' << std::get<6>(p) << ',' << std::get<7>(p) << ',' << std::get<8>(p) << ',' << row.comment;
  return out.str();
}

std::vector<CensusRow> parse_census_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("missing census.csv header");
  std::vector<CensusRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f = split_csv(line);
    if (f.size() != 12) throw ParseError("census row needs 12 fields: " + line);
    if (f[4] != "yes" && f[4] != "no") throw ParseError("bad worthy field: " + line);
    CensusRow row;
    row.n = to_int(f[0], line);
    row.i = to_int(f[1], line);
    row.params = {to_int(f[2], line), to_int(f[3], line), f[4] == "yes", f[5], f[6],
                  to_int(f[7], line), to_int(f[8], line), f[9], f[10]};
    row.comment = f[11];
    rows.push_back(std::move(row));
  }
  return rows;
}

CensusRow analyze_graph(const Graph& g, int index) {
  GraphStats st = graph_stats(g);
  SymmetryReport sym = symmetry_report(g);
  ParamTuple p = params_of(st, sym);
  return {g.vertex_count(), index, p, comment_for(g, p, g.vertex_count())};
}

const std::vector<CensusRow>& reference_table() {
  static const std::vector<CensusRow> rows = parse_census_csv(kReferenceCsv);
  return rows;
}

std::string ReferenceDiff::report() const {
  std::ostringstream out;
  for (const Entry& e : surplus) out << "surplus n=" << e.n << " " << tuple_text(e.params) << " x" << e.count << "\n";
  for (const Entry& e : deficit) out << "deficit n=" << e.n << " " << tuple_text(e.params) << " x" << e.count << "\n";
  if (empty()) out << "match\n";
  return out.str();
}

ReferenceDiff compare_reference(const std::vector<CensusRow>& rows, int max_order) {
  std::map<std::pair<int, ParamTuple>, int> balance;
  for (const CensusRow& r : rows) {
    if (r.n <= max_order) ++balance[{r.n, r.params}];
  }
  for (const CensusRow& r : reference_table()) {
    if (r.n <= max_order) --balance[{r.n, r.params}];
  }
  ReferenceDiff diff;
  for (const auto& [key, count] : balance) {
    if (count > 0) diff.surplus.push_back({key.first, key.second, count});
    if (count < 0) diff.deficit.push_back({key.first, key.second, -count});
  }
  return diff;
}

const std::vector<std::pair<std::string, Graph>>& named_cubic_graphs() {
  static const std::vector<std::pair<std::string, Graph>> graphs = {
      {"K4", fixture("K4")},
      {"K33", fixture("K33")},
      {"Q3", fixture("Cube")},
      {"Pet", fixture("Petersen")},
      {"F014", fixture("Heawood")},
      {"F016", lcf(16, {5, -5})},
      {"F018", lcf(18, {5, 7, -7, 7, -7, -5})},
      {"F020A", lcf(20, {10, 7, 4, -4, -7, 10, -4, 7, -7, 4})},
      {"F020B", lcf(20, {5, -5, 9, -9})},
      {"F024", lcf(24, {5, -9, 7, -7, 9, -5})},
      {"F026", lcf(26, {-7, 7})},
      {"F028", coxeter_graph()},
  };
  return graphs;
}

std::string comment_for(const Graph& g, const ParamTuple& params, int n) {
  if (g.n3() == 4 && g.n4() == 3 && are_isomorphic(g, fixture("K34"))) return "K34";
  RecognitionResult rec = recognize_unworthy(g);
  if (auto* d = std::get_if<RecognizedDouble>(&rec)) {
    const auto& names = named_cubic_bytes();
    auto it = names.find(canonical_form(d->lambda).bytes);
    if (it != names.end()) return "D2(" + it->second + ")";
    return "D2(cubic on " + std::to_string(d->lambda.vertex_count()) + " vertices)";
  }
  const CensusRow* match = nullptr;
  int matches = 0;
  for (const CensusRow& row : reference_table()) {
    if (row.n == n && row.params == params) {
      match = &row;
      ++matches;
    }
  }
  if (matches == 1 && match->comment != "K34" && match->comment.rfind("D2(", 0) != 0) return match->comment;
  return "";
}

void emit(const std::vector<CensusRecord>& records, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  std::ostringstream csv, prov;
  csv << kCsvHeader << "\n";
  prov << "n,i,amalgam,group_order,verified\n";
  for (const CensusRecord& r : records) {
    std::string name = "lat34_n" + std::to_string(r.n) + "_i" + std::to_string(r.i) + ".graph";
    write_graph_file(r.graph, (fs::path(out_dir) / name).string());
    csv << csv_line(census_row(r)) << "\n";
    for (const Provenance& p : r.provenance) {
      prov << r.n << ',' << r.i << ',' << p.amalgam << ',' << p.group_order << ',' << (p.verified ? "yes" : "no")
           << "\n";
    }
  }
  for (const auto& [file, text] : {std::pair{"census.csv", csv.str()}, std::pair{"provenance.csv", prov.str()}}) {
    std::string path = (fs::path(out_dir) / file).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
  }
}

}  // namespace lat34
