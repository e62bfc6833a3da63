#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "lat34/amalgams.hpp"
#include "lat34/census.hpp"
#include "lat34/subdouble.hpp"
#include "lat34/symmetry.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBudget = 2, kInput = 3 };

int cmd_validate(const std::vector<int>& ids) {
  const auto& all = lat34::builtin_amalgams();
  int status = kOk;
  for (const lat34::Amalgam& a : all) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), a.id) == ids.end()) continue;
    lat34::ValidationReport r = lat34::validate(a);
    std::cout << r.summary() << "\n";
    if (!r.passed()) status = kMismatch;
  }
  return status;
}

struct CensusArgs {
  int max_vertices = 0;
  std::vector<int> amalgams;
  bool full = false;
  int jobs = 1;
  std::string out;
  double time_budget = -1;
  std::uint64_t node_budget = 2'000'000'000;
  std::vector<std::string> methods;
  bool quiet = false;
};

int cmd_census(const CensusArgs& args) {
  lat34::CensusOptions o;
  o.max_vertices = args.max_vertices > 0 ? args.max_vertices : (args.full ? 350 : 100);
  if (o.max_vertices > 100 && !args.full) {
    std::cerr << "error: bounds above 100 vertices need --full\n";
    return kInput;
  }
  for (int id : args.amalgams) {
    if (id < 0 || id >= static_cast<int>(lat34::builtin_amalgams().size())) {
      std::cerr << "error: no amalgam " << id << "\n";
      return kInput;
    }
  }
  o.amalgams = args.amalgams;
  o.jobs = args.jobs;
  o.node_budget = args.node_budget;
  o.seconds_per_amalgam = args.time_budget >= 0 ? args.time_budget : (args.full ? 3600 : 0);
  for (const std::string& m : args.methods) {
    auto colon = m.find(':');
    std::string kind = colon == std::string::npos ? "" : m.substr(colon + 1);
    if (kind != "quotients" && kind != "actions") {
      std::cerr << "error: --method expects I:quotients or I:actions, got " << m << "\n";
      return kInput;
    }
    o.methods.emplace_back(std::stoi(m.substr(0, colon)),
                           kind == "actions" ? lat34::SearchMethod::Actions : lat34::SearchMethod::Quotients);
  }
  if (!args.quiet) o.log = [](const std::string& msg) { std::cerr << msg << "\n"; };

  lat34::CensusResult res = lat34::run_census(o);
  lat34::emit(res.records, args.out);
  std::map<int, int> per_order;
  for (const auto& r : res.records) ++per_order[r.n];
  std::cout << res.records.size() << " graphs on at most " << o.max_vertices << " vertices:";
  for (const auto& [n, c] : per_order) std::cout << " " << n << ":" << c;
  std::cout << "\n";
  for (const auto& oc : res.outcomes) {
    if (!oc.completed) std::cout << "U" << oc.amalgam << " incomplete: " << oc.failure << "\n";
  }
  return res.complete() ? kOk : kBudget;
}

int cmd_analyze(const std::string& file) {
  lat34::Graph g = lat34::read_graph_file(file);
  if (!g.biregular_34() || !g.split_bipartite() || !g.connected()) {
    std::cerr << "error: " << file << " is not a connected biregular {3,4} graph\n";
    return kInput;
  }
  std::cout << lat34::kCsvHeader << "\n" << lat34::csv_line(lat34::analyze_graph(g)) << "\n";
  return kOk;
}

int cmd_compare(const std::string& dir, int max_order) {
  std::string path = (std::filesystem::path(dir) / "census.csv").string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lat34::IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  lat34::ReferenceDiff diff = lat34::compare_reference(lat34::parse_census_csv(buf.str()), max_order);
  std::cout << diff.report();
  return diff.empty() ? kOk : kMismatch;
}

int cmd_isocheck(const std::string& f1, const std::string& f2) {
  bool iso = lat34::are_isomorphic(lat34::read_graph_file(f1), lat34::read_graph_file(f2));
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? kOk : kMismatch;
}

int cmd_recognize(const std::string& file) {
  lat34::RecognitionResult r = lat34::recognize_unworthy(lat34::read_graph_file(file));
  std::cout << lat34::describe(r) << "\n";
  if (auto* d = std::get_if<lat34::RecognizedDouble>(&r)) std::cout << lat34::write_graph(d->lambda);
  return std::holds_alternative<lat34::Malformed>(r) ? kInput : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally arc-transitive graphs of valence {3,4} with trivial edge kernel"};
  app.require_subcommand(1);

  std::vector<int> validate_ids;
  auto* validate = app.add_subcommand("validate", "Check the 19 universal amalgams");
  validate->add_option("--amalgam", validate_ids, "Amalgam id (repeatable)");

  CensusArgs cargs;
  auto* census = app.add_subcommand("census", "Enumerate coset graphs and write the census");
  census->add_option("--max-vertices", cargs.max_vertices, "Vertex bound (default 100, 350 with --full)");
  census->add_option("--amalgam", cargs.amalgams, "Amalgam id (repeatable; default all)");
  census->add_flag("--full", cargs.full, "Allow bounds above 100 vertices, with a per-amalgam time budget");
  census->add_option("--jobs", cargs.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--out", cargs.out, "Output directory")->required();
  census->add_option("--time-budget", cargs.time_budget, "Seconds per amalgam (0 = unlimited)");
  census->add_option("--node-budget", cargs.node_budget, "Search nodes per amalgam");
  census->add_option("--method", cargs.methods, "Override search method, I:quotients or I:actions");
  census->add_flag("--quiet", cargs.quiet, "No progress lines on stderr");

  std::string file, file2;
  auto* analyze = app.add_subcommand("analyze", "Parameter row for one graph");
  analyze->add_option("FILE", file)->required();
  std::string census_dir;
  auto* compare = app.add_subcommand("compare", "Compare a census directory with the reference table");
  compare->add_option("--census", census_dir)->required();
  int max_order = 100;
  compare->add_option("--max-order", max_order, "Compare orders up to this bound (default 100)");
  auto* isocheck = app.add_subcommand("isocheck", "Test two graphs for isomorphism");
  isocheck->add_option("FILE1", file)->required();
  isocheck->add_option("FILE2", file2)->required();
  auto* subdivide = app.add_subcommand("subdivide", "Subdivision of a cubic graph");
  subdivide->add_option("FILE", file)->required();
  auto* dbl = app.add_subcommand("double", "Subdivided double of a cubic graph");
  dbl->add_option("FILE", file)->required();
  auto* recognize = app.add_subcommand("recognize", "Recognise K34 or a subdivided double");
  recognize->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*validate) return cmd_validate(validate_ids);
    if (*census) return cmd_census(cargs);
    if (*analyze) return cmd_analyze(file);
    if (*compare) return cmd_compare(census_dir, max_order);
    if (*isocheck) return cmd_isocheck(file, file2);
    if (*subdivide) {
      std::cout << lat34::write_graph(lat34::subdivision(lat34::read_graph_file(file)));
      return kOk;
    }
    if (*dbl) {
      std::cout << lat34::write_graph(lat34::subdivided_double(lat34::read_graph_file(file)));
      return kOk;
    }
    if (*recognize) return cmd_recognize(file);
  } catch (const lat34::SearchBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const lat34::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
