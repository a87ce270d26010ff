#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dee/estrada_bounds.hpp"
#include "dee/graph.hpp"

namespace dee {

/// Everything `compute` reports about one connected graph.
struct ReportRecord {
  std::string graph_id;  // graph6 of the labeled graph
  int n = 0;
  int m = 0;
  int rho = 0;
  std::optional<int> delta1;
  std::optional<int> delta2;
  Spectrum distance_spectrum;
  int n_positive = 0;
  EstradaValue dee;
  EstradaValue ee_complement;
  std::optional<EstradaValue> dee_complement;
  BoundReportSet bounds;
  std::optional<ComparisonChecks> comparisons;
};

ReportRecord make_record(const GraphAnalysis& a);
ReportRecord make_record(const Graph& g);

/// "%.15g" (round-half-even on the exact binary value); "inf"/"-inf"/"nan" for non-finite.
std::string format_real(double x);

enum class OutputFormat { Json, Csv };

std::string record_json(const ReportRecord& r);
std::string bounds_json(const ReportRecord& r);
std::string bounds_csv(const ReportRecord& r);

/// Fixed sweep header; one column per field of csv_row.
std::string sweep_csv_header();
std::string sweep_csv_row(std::string_view family_label, const ReportRecord& r);
std::string records_json(const std::vector<std::pair<std::string, ReportRecord>>& labeled);

/// Inclusive "a..b" or a single integer.
std::pair<int, int> parse_range(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

struct SweepRequest {
  std::string family;              // complete|cycle|path|star|multipartite|petersen|gnp
  std::optional<std::pair<int, int>> n_range;
  std::vector<int> parts;          // multipartite
  double p = 0.5;                  // gnp
  std::uint64_t seed = 1;          // gnp; member k uses seed + k
};

/// Expands a request into concrete families. Throws ParseError / PreconditionError.
std::vector<GraphFamily> expand_sweep(const SweepRequest& req);

struct SweepRow {
  std::string label;
  std::optional<ReportRecord> record;  // empty when the generated graph was disconnected
};

/// Records in family order regardless of thread scheduling.
std::vector<SweepRow> run_sweep(const std::vector<GraphFamily>& families, int threads);

struct VerificationEvent {
  int n = 0;
  std::string graph_id;
  std::string check;
  double value = 0.0;  // slack or residual; 0 for equality hits
};

struct VerificationSummary {
  std::string population;
  int max_n = 0;
  std::uint64_t graphs_checked = 0;
  std::vector<std::pair<int, std::uint64_t>> checked_per_n;
  std::vector<VerificationEvent> violations;     // asserted invariants that failed
  std::vector<VerificationEvent> findings;       // non-fatal: T2/T4 failures
  std::vector<VerificationEvent> equality_hits;  // T2, T3, L3, T6 attained

  bool ok() const { return violations.empty(); }
};

/// Checks every asserted invariant of the bound catalog on one connected graph (n >= 2),
/// appending to `out` (graphs_checked is not touched).
void verify_graph(const Graph& g, VerificationSummary& out);

/// Exhaustive run over connected labeled graphs with 2 <= n <= max_n (max_n in 2..8).
VerificationSummary run_verification(int max_n, int threads);

std::string verification_json(const VerificationSummary& s);
std::string verification_csv(const VerificationSummary& s);

/// --threads, then DEE_THREADS, then hardware concurrency.
int resolve_threads(std::optional<int> flag);

}  // namespace dee
