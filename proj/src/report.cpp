#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "dee/errors.hpp"
#include "dee/harness.hpp"
#include "json.hpp"

namespace dee {

using json = nlohmann::ordered_json;

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

ReportRecord make_record(const GraphAnalysis& a) {
  ReportRecord r;
  r.graph_id = to_graph6(a.graph);
  r.n = a.graph.order();
  r.m = a.graph.size();
  r.rho = a.rho;
  if (a.degrees) {
    r.delta1 = a.degrees->delta1;
    r.delta2 = a.degrees->delta2;
    r.comparisons = comparison_checks(r.n, r.m, r.rho, *r.delta1, *r.delta2);
  }
  r.distance_spectrum = a.distance_spectrum;
  r.n_positive = count_positive(a.distance_spectrum);
  r.dee = a.dee;
  r.ee_complement = a.ee_complement;
  r.dee_complement = a.dee_complement;
  r.bounds = bound_report(a);
  return r;
}

ReportRecord make_record(const Graph& g) { return make_record(analyze(g)); }

namespace {

// Doubles go through the 15-digit text form so the emitted JSON number carries at most
// 15 significant digits; non-finite values become null.
json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_real(x).c_str(), nullptr);
}

json estrada_json(const EstradaValue& v) {
  return json{{"value", real(v.value)}, {"log_value", real(v.log_value)}, {"log_domain", v.overflowed}};
}

json bound_json(const BoundReport& b) {
  json j{{"theorem_id", std::string(to_string(b.theorem_id))},
         {"bound_value", real(b.bound_value)},
         {"observed", real(b.observed)},
         {"slack", real(b.slack)},
         {"holds", b.holds},
         {"equality", b.equality},
         {"strict_required", b.strict_required},
         {"log_domain", b.log_domain}};
  if (!b.detail.empty()) j["detail"] = b.detail;
  return j;
}

json bounds_array(const BoundReportSet& set) {
  json arr = json::array();
  for (const auto& b : set.reports) arr.push_back(bound_json(b));
  return arr;
}

json omitted_array(const BoundReportSet& set) {
  json arr = json::array();
  for (const auto& o : set.omitted) arr.push_back(json{{"theorem_id", std::string(to_string(o.theorem_id))}, {"reason", o.reason}});
  return arr;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json record_object(const ReportRecord& r) {
  json spectrum = json::array();
  for (double x : r.distance_spectrum.values()) spectrum.push_back(real(x));
  json j{{"graph_id", r.graph_id},
         {"n", r.n},
         {"m", r.m},
         {"rho", r.rho},
         {"delta1", optional_int(r.delta1)},
         {"delta2", optional_int(r.delta2)},
         {"distance_spectrum", spectrum},
         {"n_positive", r.n_positive},
         {"dee", estrada_json(r.dee)},
         {"ee_complement", estrada_json(r.ee_complement)},
         {"dee_complement", r.dee_complement ? estrada_json(*r.dee_complement) : json(nullptr)},
         {"bounds", bounds_array(r.bounds)},
         {"omitted", omitted_array(r.bounds)}};
  j["comparisons"] = r.comparisons ? json{{"t3_beats_t1", r.comparisons->t3_beats_t1}, {"t5_beats_t1", r.comparisons->t5_beats_t1}}
                                   : json(nullptr);
  return j;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

constexpr TheoremId kAllTheorems[] = {TheoremId::T1_lower, TheoremId::T1_upper,   TheoremId::T2_lower,
                                      TheoremId::T3_lower, TheoremId::T4_ng_lower, TheoremId::T5_upper,
                                      TheoremId::T6_identity, TheoremId::L3_lambda1_lower, TheoremId::L4_class};

}  // namespace

std::string record_json(const ReportRecord& r) { return record_object(r).dump(2) + "\n"; }

std::string bounds_json(const ReportRecord& r) {
  json j{{"graph_id", r.graph_id}, {"n", r.n}, {"m", r.m}, {"bounds", bounds_array(r.bounds)}, {"omitted", omitted_array(r.bounds)}};
  return j.dump(2) + "\n";
}

std::string bounds_csv(const ReportRecord& r) {
  std::ostringstream os;
  os << "graph_id,theorem_id,bound_value,observed,slack,holds,equality,strict_required,log_domain,detail\n";
  for (const auto& b : r.bounds.reports) {
    os << r.graph_id << ',' << to_string(b.theorem_id) << ',' << format_real(b.bound_value) << ','
       << format_real(b.observed) << ',' << format_real(b.slack) << ',' << csv_bool(b.holds) << ','
       << csv_bool(b.equality) << ',' << csv_bool(b.strict_required) << ',' << csv_bool(b.log_domain) << ','
       << b.detail << '\n';
  }
  for (const auto& o : r.bounds.omitted) {
    os << r.graph_id << ',' << to_string(o.theorem_id) << ",,,,,,,," << o.reason << '\n';
  }
  return os.str();
}

std::string sweep_csv_header() {
  std::string h = "family,graph_id,n,m,rho,delta1,delta2,lambda_1,lambda_n,n_positive,dee,log_dee,dee_log_domain,ee_complement";
  for (TheoremId id : kAllTheorems) {
    const std::string name(to_string(id));
    h += "," + name + "_holds," + name + "_equality";
  }
  h += ",l4_class,t6_status,t3_beats_t1,t5_beats_t1";
  return h;
}

std::string sweep_csv_row(std::string_view family_label, const ReportRecord& r) {
  std::ostringstream os;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  os << '"' << family_label << "\"," << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.rho << ','
     << opt(r.delta1) << ',' << opt(r.delta2) << ',' << format_real(r.distance_spectrum.largest()) << ','
     << format_real(r.distance_spectrum.least()) << ',' << r.n_positive << ',' << format_real(r.dee.value) << ','
     << format_real(r.dee.log_value) << ',' << csv_bool(r.dee.overflowed) << ',' << format_real(r.ee_complement.value);
  for (TheoremId id : kAllTheorems) {
    if (const BoundReport* b = r.bounds.find(id)) {
      os << ',' << csv_bool(b->holds) << ',' << csv_bool(b->equality);
    } else {
      os << ",,";
    }
  }
  const BoundReport* l4 = r.bounds.find(TheoremId::L4_class);
  os << ',' << (l4 ? l4->detail : std::string());
  std::string t6 = "applied";
  for (const auto& o : r.bounds.omitted) {
    if (o.theorem_id == TheoremId::T6_identity) t6 = o.reason;
  }
  os << ',' << t6;
  if (r.comparisons) {
    os << ',' << csv_bool(r.comparisons->t3_beats_t1) << ',' << csv_bool(r.comparisons->t5_beats_t1);
  } else {
    os << ",,";
  }
  return os.str();
}

std::string records_json(const std::vector<std::pair<std::string, ReportRecord>>& labeled) {
  json arr = json::array();
  for (const auto& [label, rec] : labeled) {
    json j{{"family", label}};
    j.update(record_object(rec));
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

json events_json(const std::vector<VerificationEvent>& events, bool with_value) {
  json arr = json::array();
  for (const auto& e : events) {
    json j{{"n", e.n}, {"graph_id", e.graph_id}, {"check", e.check}};
    if (with_value) j["value"] = real(e.value);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

std::string verification_json(const VerificationSummary& s) {
  json per_n = json::object();
  for (const auto& [n, c] : s.checked_per_n) per_n[std::to_string(n)] = c;
  json j{{"population", s.population},
         {"max_n", s.max_n},
         {"graphs_checked", s.graphs_checked},
         {"checked_per_n", per_n},
         {"ok", s.ok()},
         {"violations", events_json(s.violations, true)},
         {"findings", events_json(s.findings, true)},
         {"equality_hits", events_json(s.equality_hits, false)}};
  return j.dump(2) + "\n";
}

std::string verification_csv(const VerificationSummary& s) {
  std::ostringstream os;
  os << "kind,n,graph_id,check,value\n";
  for (const auto& [n, c] : s.checked_per_n) os << "checked," << n << ",,," << c << '\n';
  auto emit = [&](const char* kind, const std::vector<VerificationEvent>& events) {
    for (const auto& e : events) {
      os << kind << ',' << e.n << ',' << e.graph_id << ',' << e.check << ',' << format_real(e.value) << '\n';
    }
  };
  emit("violation", s.violations);
  emit("finding", s.findings);
  emit("equality", s.equality_hits);
  return os.str();
}

}  // namespace dee
