#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dee/graph.hpp"
#include "dee/metric.hpp"
#include "dee/spectra.hpp"

namespace dee {

/// Exponents above this are reported in log-domain.
inline constexpr double kLogDomainThreshold = 700.0;

/// Sum of e^lambda over a spectrum. With a distance spectrum this is DEE(G),
/// with an adjacency spectrum EE(G).
struct EstradaValue {
  double value = 0.0;      // compensated sum; +inf once it leaves double range
  double log_value = 0.0;  // log-sum-exp, always finite
  bool overflowed = false; // some lambda exceeds kLogDomainThreshold
};

EstradaValue estrada_index(const Spectrum& s);

/// constant + e^exponent, kept unevaluated so large exponents stay comparable.
struct ShiftedExp {
  double constant = 0.0;  // >= 0 for every bound that uses this
  double exponent = 0.0;

  bool log_domain() const { return exponent > kLogDomainThreshold; }
  double value() const;
  double log() const;
};

struct Thm1Bounds {
  double lower;      // sqrt(n^2 + 4m)
  ShiftedExp upper;  // n - 1 + e^{rho sqrt(n(n-1))}
};

// Formula-level evaluations (no graph work).
Thm1Bounds thm1_bounds(int n, int m, int rho);
double thm2_lower(int n, int m);
double thm3_lower(int n, int delta1, int delta2);
double thm4_ng_lower(int n);
ShiftedExp thm5_upper(int n, int rho);
/// e^{2n-r-2} - e^{n-r-2} + e^{-1} EE(complement).
double thm6_rhs(int n, int r, double ee_complement);
double lemma3_bound(int n, int delta1, int delta2);

// Graph-level evaluations. All require a connected graph (PreconditionError otherwise);
// all except thm1_bounds require n >= 2.
Thm1Bounds thm1_bounds(const Graph& g);
double thm2_lower(const Graph& g);
double thm3_lower(const Graph& g);
ShiftedExp thm5_upper(const Graph& g);

struct IdentitySides {
  double lhs;  // DEE(G) from the distance spectrum
  double rhs;  // closed form through EE of the complement
};

/// Requires g regular with diameter <= 2.
IdentitySides thm6_identity(const Graph& g);

struct Lemma3Bound {
  double bound;
  bool equality_expected;  // structural: regular with diameter <= 2
};

Lemma3Bound lemma3_lambda1_lower(const Graph& g);

enum class Lemma4Class { CompleteCase, MultipartiteCase, Below2383 };

std::string_view to_string(Lemma4Class c);

inline constexpr double kLemma4Threshold = -2.383;
inline constexpr double kSignatureTol = 1e-8;

/// Complement is a disjoint union of cliques with between 2 and n-1 of them.
bool is_complete_multipartite(const Graph& g);
bool is_regular_diameter_at_most_2(const Graph& g);

/// Class from structure alone.
Lemma4Class lemma4_structural_class(const Graph& g);

/// True iff the least eigenvalue matches the signature the class predicts.
bool lemma4_signature_matches(Lemma4Class c, double least_eigenvalue);

/// Structural class checked against s.least(); throws InvariantError on disagreement.
Lemma4Class lemma4_classify(const Graph& g, const Spectrum& s);

enum class TheoremId {
  T1_lower,
  T1_upper,
  T2_lower,
  T3_lower,
  T4_ng_lower,
  T5_upper,
  T6_identity,
  L3_lambda1_lower,
  L4_class,
};

std::string_view to_string(TheoremId id);

struct BoundReport {
  TheoremId theorem_id{};
  double bound_value = 0.0;  // natural log of the bound when log_domain
  double observed = 0.0;     // natural log of the observation when log_domain
  double slack = 0.0;        // observed - bound (lower bounds), bound - observed (upper bounds)
  bool holds = false;
  bool equality = false;
  bool strict_required = false;
  bool log_domain = false;
  std::string detail;  // L4: the class name
};

struct Omission {
  TheoremId theorem_id;
  std::string reason;
};

struct BoundReportSet {
  std::vector<BoundReport> reports;
  std::vector<Omission> omitted;

  const BoundReport* find(TheoremId id) const;
};

inline constexpr double kRelTol = 1e-9;
inline constexpr double kStrictSlack = 1e-6;

/// Everything the bound catalog needs about one connected graph, computed once.
struct GraphAnalysis {
  Graph graph;
  DistanceMatrix distances;
  Spectrum distance_spectrum;
  EstradaValue dee;
  int rho = 0;
  std::optional<DegreeProfile> degrees;  // n >= 2
  bool regular = false;
  Graph complement;
  bool complement_connected = false;
  Spectrum complement_adjacency_spectrum;
  EstradaValue ee_complement;
  std::optional<Spectrum> complement_distance_spectrum;  // when complement_connected
  std::optional<EstradaValue> dee_complement;
};

/// Throws PreconditionError for disconnected input.
GraphAnalysis analyze(const Graph& g);

BoundReportSet bound_report(const GraphAnalysis& a);
BoundReportSet bound_report(const Graph& g);

struct ComparisonChecks {
  bool t3_beats_t1 = false;
  bool t5_beats_t1 = false;
};

ComparisonChecks comparison_checks(const Graph& g);
ComparisonChecks comparison_checks(int n, int m, int rho, int delta1, int delta2);

}  // namespace dee
