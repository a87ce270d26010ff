// dee: distance spectra, distance Estrada index and bound reports for connected graphs.
//
// Exit codes: 0 success, 1 internal error, 2 parse/usage error, 3 precondition violation,
// 4 invariant violation reported by `verify`.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dee/errors.hpp"
#include "dee/graph.hpp"
#include "dee/harness.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInvariant = 4;

struct GraphInput {
  std::string g6;
  std::string edges;
  std::string format = "json";
  std::string out;
  std::optional<int> threads;
};

dee::Graph load_graph(const GraphInput& in) {
  if (!in.g6.empty()) return dee::parse_graph6(in.g6);
  std::ifstream file(in.edges, std::ios::binary);
  if (!file) throw dee::ParseError("cannot open edge list " + in.edges);
  const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  return dee::parse_edge_list(text);
}

dee::Graph load_connected(const GraphInput& in) {
  dee::Graph g = load_graph(in);
  if (!dee::is_connected(g)) throw dee::PreconditionError("input graph is disconnected");
  return g;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw dee::PreconditionError("cannot write " + path);
  file << text;
}

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* g6 = cmd->add_option("--g6", in.g6, "graph6 string");
  auto* edges = cmd->add_option("--edges", in.edges, "edge-list file (first line \"n m\", then \"u v\" per edge)");
  g6->excludes(edges);
  edges->excludes(g6);
  cmd->add_option("--format", in.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", in.out, "output path (default stdout)");
  cmd->add_option("--threads", in.threads, "worker threads (single-graph commands run on one)");
  cmd->callback([cmd] {
    if (cmd->count("--g6") + cmd->count("--edges") != 1) throw CLI::ValidationError("exactly one of --g6 / --edges is required");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance spectra, distance Estrada index and its bounds"};
  app.require_subcommand(1);

  GraphInput compute_in;
  auto* compute = app.add_subcommand("compute", "spectrum, DEE and full report for one graph");
  add_graph_options(compute, compute_in);

  GraphInput bounds_in;
  auto* bounds = app.add_subcommand("bounds", "bound reports for one graph");
  add_graph_options(bounds, bounds_in);

  dee::SweepRequest sweep_req;
  std::string sweep_n;
  std::string sweep_parts;
  std::string sweep_out;
  std::string sweep_format = "csv";
  std::optional<int> sweep_threads;
  auto* sweep = app.add_subcommand("sweep", "one report row per member of a graph family");
  sweep->add_option("--family", sweep_req.family, "complete|cycle|path|star|multipartite|petersen|gnp")->required();
  sweep->add_option("--n", sweep_n, "order range a..b");
  sweep->add_option("--parts", sweep_parts, "multipartite part sizes, e.g. 2,2,2");
  sweep->add_option("--p", sweep_req.p, "edge probability for gnp");
  sweep->add_option("--seed", sweep_req.seed, "base seed for gnp");
  sweep->add_option("--out", sweep_out, "output path (default stdout)");
  sweep->add_option("--format", sweep_format, "csv|json")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--threads", sweep_threads, "worker threads (fallback: DEE_THREADS)");

  int verify_max_n = 0;
  std::string verify_out;
  std::string verify_format = "csv";
  std::optional<int> verify_threads;
  auto* verify = app.add_subcommand("verify", "exhaustive check of every asserted bound over connected labeled graphs");
  verify->add_option("--max-n", verify_max_n, "largest order, 2..8")->required();
  verify->add_option("--out", verify_out, "output path (default stdout)");
  verify->add_option("--format", verify_format, "csv|json")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--threads", verify_threads, "worker threads (fallback: DEE_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*compute) {
      dee::resolve_threads(compute_in.threads);
      const auto record = dee::make_record(load_connected(compute_in));
      emit(compute_in.format == "json" ? dee::record_json(record)
                                       : dee::sweep_csv_header() + "\n" + dee::sweep_csv_row("input", record) + "\n",
           compute_in.out);
    } else if (*bounds) {
      dee::resolve_threads(bounds_in.threads);
      const auto record = dee::make_record(load_connected(bounds_in));
      emit(bounds_in.format == "json" ? dee::bounds_json(record) : dee::bounds_csv(record), bounds_in.out);
    } else if (*sweep) {
      if (!sweep_n.empty()) sweep_req.n_range = dee::parse_range(sweep_n);
      if (!sweep_parts.empty()) sweep_req.parts = dee::parse_int_list(sweep_parts);
      const auto rows = dee::run_sweep(dee::expand_sweep(sweep_req), dee::resolve_threads(sweep_threads));
      std::ostringstream os;
      std::vector<std::pair<std::string, dee::ReportRecord>> labeled;
      if (sweep_format == "csv") os << dee::sweep_csv_header() << '\n';
      for (const auto& row : rows) {
        if (!row.record) {
          std::cerr << "skipping " << row.label << ": disconnected\n";
          continue;
        }
        if (sweep_format == "csv") {
          os << dee::sweep_csv_row(row.label, *row.record) << '\n';
        } else {
          labeled.emplace_back(row.label, *row.record);
        }
      }
      emit(sweep_format == "csv" ? os.str() : dee::records_json(labeled), sweep_out);
    } else if (*verify) {
      const auto summary = dee::run_verification(verify_max_n, dee::resolve_threads(verify_threads));
      emit(verify_format == "json" ? dee::verification_json(summary) : dee::verification_csv(summary), verify_out);
      std::cerr << "checked " << summary.graphs_checked << " graphs: " << summary.violations.size() << " violations, "
                << summary.findings.size() << " findings, " << summary.equality_hits.size() << " equality hits\n";
      if (!summary.ok()) return kExitInvariant;
    }
  } catch (const dee::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const dee::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
