#include <algorithm>
#include <cmath>
#include <string>

#include "dee/errors.hpp"
#include "dee/estrada_bounds.hpp"

namespace dee {

namespace {

void require_order(int n, int min_n, const char* op) {
  if (n < min_n) {
    throw PreconditionError(std::string(op) + " requires n >= " + std::to_string(min_n) + ", got " + std::to_string(n));
  }
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + " requires a connected graph");
}

// Number of cliques the complement splits into, or 0 if some component is not a clique.
// Equivalently: non-adjacency in g must be an equivalence relation on distinct vertices.
int complement_clique_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (part[static_cast<std::size_t>(s)] >= 0) continue;
    part[static_cast<std::size_t>(s)] = count;
    for (int v = s + 1; v < n; ++v) {
      if (!g.adjacent(s, v)) part[static_cast<std::size_t>(v)] = count;
    }
    ++count;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool same = part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)];
      if (same == g.adjacent(u, v)) return 0;
    }
  }
  return count;
}

}  // namespace

Thm1Bounds thm1_bounds(int n, int m, int rho) {
  const double nn = n;
  return {std::sqrt(nn * nn + 4.0 * m), ShiftedExp{nn - 1.0, rho * std::sqrt(nn * (nn - 1.0))}};
}

double thm2_lower(int n, int m) {
  require_order(n, 2, "thm2_lower");
  const double x = 2.0 * (n - 1) - 2.0 * m / n;
  return std::exp(x) + std::exp(-x) + (n - 2);
}

double lemma3_bound(int n, int delta1, int delta2) {
  require_order(n, 2, "lemma3_bound");
  return std::sqrt(static_cast<double>(2 * n - 2 - delta1) * static_cast<double>(2 * n - 2 - delta2));
}

double thm3_lower(int n, int delta1, int delta2) {
  require_order(n, 2, "thm3_lower");
  const double k = n - 1;
  const double head = std::exp(lemma3_bound(n, delta1, delta2));
  const double tail = k * std::exp(-std::sqrt((2.0 - delta1 / k) * (2.0 - delta2 / k)));
  return head + tail;
}

double thm4_ng_lower(int n) {
  require_order(n, 2, "thm4_ng_lower");
  const double x = 1.5 * (n - 1);
  return 2.0 * std::exp(x) + 2.0 * std::exp(-x) + 2.0 * n - 4.0;
}

ShiftedExp thm5_upper(int n, int rho) {
  require_order(n, 2, "thm5_upper");
  const double nn = n;
  const double r = rho;
  return ShiftedExp{nn - 1.0, std::sqrt(nn * (nn - 1.0) * r * r - 1.0)};
}

double thm6_rhs(int n, int r, double ee_complement) {
  return std::exp(2.0 * n - r - 2.0) - std::exp(static_cast<double>(n - r - 2)) + std::exp(-1.0) * ee_complement;
}

Thm1Bounds thm1_bounds(const Graph& g) {
  require_connected(g, "thm1_bounds");
  return thm1_bounds(g.order(), g.size(), diameter(g));
}

double thm2_lower(const Graph& g) {
  require_order(g.order(), 2, "thm2_lower");
  require_connected(g, "thm2_lower");
  return thm2_lower(g.order(), g.size());
}

double thm3_lower(const Graph& g) {
  require_order(g.order(), 2, "thm3_lower");
  require_connected(g, "thm3_lower");
  const auto p = degree_profile(g);
  return thm3_lower(g.order(), p.delta1, p.delta2);
}

ShiftedExp thm5_upper(const Graph& g) {
  require_order(g.order(), 2, "thm5_upper");
  return thm5_upper(g.order(), diameter(g));
}

bool is_regular_diameter_at_most_2(const Graph& g) {
  return is_connected(g) && is_regular(g) && diameter(g) <= 2;
}

IdentitySides thm6_identity(const Graph& g) {
  if (!is_regular(g)) throw PreconditionError("thm6_identity requires a regular graph");
  if (!is_connected(g) || diameter(g) > 2) throw PreconditionError("thm6_identity requires diameter <= 2");
  const double lhs = estrada_index(distance_spectrum(g)).value;
  const double ee = estrada_index(adjacency_spectrum(complement(g))).value;
  return {lhs, thm6_rhs(g.order(), g.degree(0), ee)};
}

Lemma3Bound lemma3_lambda1_lower(const Graph& g) {
  require_order(g.order(), 2, "lemma3_lambda1_lower");
  require_connected(g, "lemma3_lambda1_lower");
  const auto p = degree_profile(g);
  return {lemma3_bound(g.order(), p.delta1, p.delta2), is_regular_diameter_at_most_2(g)};
}

std::string_view to_string(Lemma4Class c) {
  switch (c) {
    case Lemma4Class::CompleteCase: return "CompleteCase";
    case Lemma4Class::MultipartiteCase: return "MultipartiteCase";
    case Lemma4Class::Below2383: return "Below2383";
  }
  return "?";
}

bool is_complete_multipartite(const Graph& g) {
  const int parts = complement_clique_components(g);
  return parts >= 2 && parts <= g.order() - 1;
}

Lemma4Class lemma4_structural_class(const Graph& g) {
  require_order(g.order(), 2, "lemma4_classify");
  if (is_complete(g)) return Lemma4Class::CompleteCase;
  if (is_complete_multipartite(g)) return Lemma4Class::MultipartiteCase;
  return Lemma4Class::Below2383;
}

bool lemma4_signature_matches(Lemma4Class c, double least) {
  switch (c) {
    case Lemma4Class::CompleteCase: return std::abs(least + 1.0) <= kSignatureTol;
    case Lemma4Class::MultipartiteCase: return std::abs(least + 2.0) <= kSignatureTol;
    case Lemma4Class::Below2383: return least < kLemma4Threshold;
  }
  return false;
}

Lemma4Class lemma4_classify(const Graph& g, const Spectrum& s) {
  require_connected(g, "lemma4_classify");
  const Lemma4Class c = lemma4_structural_class(g);
  if (!lemma4_signature_matches(c, s.least())) {
    throw InvariantError("least distance eigenvalue " + std::to_string(s.least()) +
                         " contradicts structural class " + std::string(to_string(c)));
  }
  return c;
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_lower: return "T1_lower";
    case TheoremId::T1_upper: return "T1_upper";
    case TheoremId::T2_lower: return "T2_lower";
    case TheoremId::T3_lower: return "T3_lower";
    case TheoremId::T4_ng_lower: return "T4_ng_lower";
    case TheoremId::T5_upper: return "T5_upper";
    case TheoremId::T6_identity: return "T6_identity";
    case TheoremId::L3_lambda1_lower: return "L3_lambda1_lower";
    case TheoremId::L4_class: return "L4_class";
  }
  return "?";
}

const BoundReport* BoundReportSet::find(TheoremId id) const {
  auto it = std::find_if(reports.begin(), reports.end(), [id](const BoundReport& r) { return r.theorem_id == id; });
  return it == reports.end() ? nullptr : &*it;
}

GraphAnalysis analyze(const Graph& g) {
  GraphAnalysis a{g, distance_matrix(g), Spectrum{}, {}, 0, std::nullopt, false, complement(g), false, Spectrum{}, {}, std::nullopt, std::nullopt};
  a.distance_spectrum = eig_sym(to_sym_matrix(a.distances));
  a.dee = estrada_index(a.distance_spectrum);
  a.rho = a.distances.max_entry();
  if (g.order() >= 2) a.degrees = degree_profile(g);
  a.regular = is_regular(g);
  a.complement_connected = is_connected(a.complement);
  a.complement_adjacency_spectrum = adjacency_spectrum(a.complement);
  a.ee_complement = estrada_index(a.complement_adjacency_spectrum);
  if (a.complement_connected) {
    a.complement_distance_spectrum = distance_spectrum(a.complement);
    a.dee_complement = estrada_index(*a.complement_distance_spectrum);
  }
  return a;
}

namespace {

double rel_scale(double observed) { return std::max(1.0, std::abs(observed)); }

BoundReport lower_bound(TheoremId id, double bound, double observed, bool strict) {
  BoundReport r;
  r.theorem_id = id;
  r.bound_value = bound;
  r.observed = observed;
  r.slack = observed - bound;
  r.strict_required = strict;
  r.equality = std::abs(r.slack) <= kRelTol * rel_scale(observed);
  r.holds = strict ? r.slack > kStrictSlack : r.slack >= -kRelTol * rel_scale(observed);
  return r;
}

// Upper bound of the form c + e^x against DEE, switching to logs when either side is huge.
BoundReport upper_bound(TheoremId id, const ShiftedExp& bound, const EstradaValue& dee, bool strict) {
  BoundReport r;
  r.theorem_id = id;
  r.log_domain = bound.log_domain() || dee.overflowed;
  r.bound_value = r.log_domain ? bound.log() : bound.value();
  r.observed = r.log_domain ? dee.log_value : dee.value;
  r.slack = r.bound_value - r.observed;
  r.strict_required = strict;
  r.equality = std::abs(r.slack) <= kRelTol * rel_scale(r.observed);
  r.holds = strict ? r.slack > kStrictSlack : r.slack >= -kRelTol * rel_scale(r.observed);
  return r;
}

}  // namespace

BoundReportSet bound_report(const GraphAnalysis& a) {
  BoundReportSet out;
  const int n = a.graph.order();
  const int m = a.graph.size();
  const bool nontrivial = n >= 2;

  const Thm1Bounds t1 = thm1_bounds(n, m, a.rho);
  out.reports.push_back(lower_bound(TheoremId::T1_lower, t1.lower, a.dee.value, nontrivial));
  out.reports.push_back(upper_bound(TheoremId::T1_upper, t1.upper, a.dee, nontrivial));

  if (!nontrivial) {
    for (TheoremId id : {TheoremId::T2_lower, TheoremId::T3_lower, TheoremId::T4_ng_lower, TheoremId::T5_upper,
                         TheoremId::L3_lambda1_lower, TheoremId::L4_class}) {
      out.omitted.push_back({id, "n < 2"});
    }
  } else {
    const DegreeProfile& p = *a.degrees;
    out.reports.push_back(lower_bound(TheoremId::T2_lower, thm2_lower(n, m), a.dee.value, false));
    out.reports.push_back(lower_bound(TheoremId::T3_lower, thm3_lower(n, p.delta1, p.delta2), a.dee.value, false));

    if (a.complement_connected) {
      out.reports.push_back(
          lower_bound(TheoremId::T4_ng_lower, thm4_ng_lower(n), a.dee.value + a.dee_complement->value, true));
    } else {
      out.omitted.push_back({TheoremId::T4_ng_lower, "complement disconnected"});
    }

    out.reports.push_back(upper_bound(TheoremId::T5_upper, thm5_upper(n, a.rho), a.dee, true));
  }

  if (!a.regular) {
    out.omitted.push_back({TheoremId::T6_identity, "not regular"});
  } else if (a.rho > 2) {
    out.omitted.push_back({TheoremId::T6_identity, "diameter > 2"});
  } else {
    BoundReport r;
    r.theorem_id = TheoremId::T6_identity;
    r.observed = a.dee.value;
    r.bound_value = thm6_rhs(n, a.graph.degree(0), a.ee_complement.value);
    r.slack = r.observed - r.bound_value;
    r.holds = std::abs(r.slack) <= kRelTol * rel_scale(r.observed);
    r.equality = r.holds;
    out.reports.push_back(r);
  }

  if (nontrivial) {
    const DegreeProfile& p = *a.degrees;
    BoundReport l3 = lower_bound(TheoremId::L3_lambda1_lower, lemma3_bound(n, p.delta1, p.delta2),
                                 a.distance_spectrum.largest(), false);
    l3.equality = a.regular && a.rho <= 2;
    out.reports.push_back(l3);

    BoundReport l4;
    l4.theorem_id = TheoremId::L4_class;
    const Lemma4Class c = lemma4_structural_class(a.graph);
    l4.detail = std::string(to_string(c));
    l4.observed = a.distance_spectrum.least();
    l4.holds = lemma4_signature_matches(c, l4.observed);
    if (c == Lemma4Class::Below2383) {
      l4.bound_value = kLemma4Threshold;
      l4.slack = l4.bound_value - l4.observed;
      l4.strict_required = true;
    } else {
      l4.bound_value = c == Lemma4Class::CompleteCase ? -1.0 : -2.0;
      l4.slack = l4.observed - l4.bound_value;
      l4.equality = l4.holds;
    }
    out.reports.push_back(l4);
  }
  return out;
}

BoundReportSet bound_report(const Graph& g) { return bound_report(analyze(g)); }

ComparisonChecks comparison_checks(int n, int m, int rho, int delta1, int delta2) {
  const Thm1Bounds t1 = thm1_bounds(n, m, rho);
  return {thm3_lower(n, delta1, delta2) >= t1.lower - kRelTol, thm5_upper(n, rho).log() <= t1.upper.log() + kRelTol};
}

ComparisonChecks comparison_checks(const Graph& g) {
  require_order(g.order(), 2, "comparison_checks");
  require_connected(g, "comparison_checks");
  const auto p = degree_profile(g);
  return comparison_checks(g.order(), g.size(), diameter(g), p.delta1, p.delta2);
}

}  // namespace dee
