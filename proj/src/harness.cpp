#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "dee/errors.hpp"
#include "dee/harness.hpp"

namespace dee {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("invalid " + std::string(what) + ": \"" + std::string(text) + "\"");
  }
  return v;
}

// Runs body(i) for i in [0, count) on up to `threads` workers; rethrows the first failure.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots), "range start");
  const int hi = parse_int(text.substr(dots + 2), "range end");
  if (lo > hi) throw ParseError("empty range " + std::string(text));
  return {lo, hi};
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start), "list entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<GraphFamily> expand_sweep(const SweepRequest& req) {
  std::vector<GraphFamily> out;
  const std::string& f = req.family;
  if (f == "petersen") {
    out.emplace_back(family::Petersen{});
    return out;
  }
  if (f == "multipartite") {
    if (req.parts.empty()) throw PreconditionError("multipartite sweep needs --parts");
    out.emplace_back(family::CompleteMultipartite{req.parts});
    return out;
  }
  if (!req.n_range) throw PreconditionError("family " + f + " needs --n");
  const auto [lo, hi] = *req.n_range;
  if (lo < 1) throw PreconditionError("--n range must start at 1 or above");
  if (hi >= 63) throw PreconditionError("--n range must stay below 63 (graph6 short form)");
  for (int n = lo; n <= hi; ++n) {
    if (f == "complete") {
      out.emplace_back(family::Complete{n});
    } else if (f == "cycle") {
      out.emplace_back(family::Cycle{n});
    } else if (f == "path") {
      out.emplace_back(family::Path{n});
    } else if (f == "star") {
      out.emplace_back(family::Star{n});
    } else if (f == "gnp") {
      out.emplace_back(family::RandomGnp{n, req.p, req.seed + static_cast<std::uint64_t>(n - lo)});
    } else {
      throw ParseError("unknown family \"" + f + "\"");
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(const std::vector<GraphFamily>& families, int threads) {
  std::vector<SweepRow> rows(families.size());
  parallel_for(families.size(), threads, [&](std::size_t i) {
    const Graph g = generate(families[i]);
    rows[i].label = describe(families[i]);
    if (is_connected(g)) rows[i].record = make_record(g);
  });
  return rows;
}

void verify_graph(const Graph& g, VerificationSummary& out) {
  const int n = g.order();
  const GraphAnalysis a = analyze(g);
  const std::string id = to_graph6(g);
  auto violation = [&](std::string check, double value) { out.violations.push_back({n, id, std::move(check), value}); };
  auto finding = [&](std::string check, double value) { out.findings.push_back({n, id, std::move(check), value}); };
  auto hit = [&](std::string check) { out.equality_hits.push_back({n, id, std::move(check), 0.0}); };

  const Lemma1Residuals l1 = lemma1_check(a.distance_spectrum, a.distances);
  if (l1.residual_sum > kRelTol) violation("L1_trace", l1.residual_sum);
  if (l1.residual_sumsq > kRelTol * l1.scale) violation("L1_sum_sq", l1.residual_sumsq);

  const bool complete = is_complete(g);
  const bool reg_diam2 = a.regular && a.rho <= 2;
  const BoundReportSet set = bound_report(a);
  for (const BoundReport& b : set.reports) {
    const std::string name(to_string(b.theorem_id));
    switch (b.theorem_id) {
      case TheoremId::T2_lower:
        if (!b.holds) finding(name, b.slack);
        if (b.equality) hit(name);
        break;
      case TheoremId::T4_ng_lower:
        if (!b.holds) finding(name, b.slack);
        break;
      case TheoremId::T3_lower:
        if (!b.holds) violation(name, b.slack);
        if (b.equality) hit(name);
        if (b.equality != complete) violation("T3_equality_iff_complete", b.slack);
        break;
      case TheoremId::L3_lambda1_lower: {
        if (!b.holds) violation(name, b.slack);
        const bool numeric_equality = std::abs(b.slack) <= kSignatureTol;
        if (numeric_equality != reg_diam2) violation("L3_equality_iff_regular_diameter_2", b.slack);
        if (reg_diam2) hit(name);
        break;
      }
      case TheoremId::T6_identity:
        if (!b.holds) violation(name, b.slack);
        else hit(name);
        break;
      default:
        if (!b.holds) violation(name, b.slack);
        break;
    }
  }

  const ComparisonChecks cmp = comparison_checks(n, g.size(), a.rho, a.degrees->delta1, a.degrees->delta2);
  if (!cmp.t3_beats_t1) violation("T3_beats_T1_lower", 0.0);
  if (!cmp.t5_beats_t1) violation("T5_beats_T1_upper", 0.0);

  if (reg_diam2) {
    const int r = g.degree(0);
    const Spectrum adj = adjacency_spectrum(g);
    const Spectrum predicted = lemma2_spectrum(adj, n, r);
    double worst = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) worst = std::max(worst, std::abs(predicted[i] - a.distance_spectrum[i]));
    if (worst > kSignatureTol) violation("L2_spectrum", worst);

    const Spectrum comp = complement_adj_spectrum(adj, n, r);
    worst = 0.0;
    for (std::size_t i = 0; i < comp.size(); ++i) worst = std::max(worst, std::abs(comp[i] - a.complement_adjacency_spectrum[i]));
    if (worst > kSignatureTol) violation("complement_adjacency_spectrum", worst);
  }
}

namespace {

void append(std::vector<VerificationEvent>& dst, std::vector<VerificationEvent>& src) {
  dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

}  // namespace

VerificationSummary run_verification(int max_n, int threads) {
  if (max_n < 2 || max_n > kMaxEnumerationOrder) {
    throw PreconditionError("verify supports 2 <= max_n <= " + std::to_string(kMaxEnumerationOrder));
  }
  VerificationSummary summary;
  summary.max_n = max_n;
  summary.population = "connected labeled graphs, 2 <= n <= " + std::to_string(max_n);

  for (int n = 2; n <= max_n; ++n) {
    const std::uint64_t total = pair_mask_count(n);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 256);
    const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    std::vector<VerificationSummary> parts(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
      const std::uint64_t first = c * chunk;
      for_each_connected(n, first, std::min(total, first + chunk), [&](std::uint64_t, const Graph& g) {
        ++parts[c].graphs_checked;
        verify_graph(g, parts[c]);
      });
    });
    std::uint64_t count = 0;
    for (auto& p : parts) {
      count += p.graphs_checked;
      append(summary.violations, p.violations);
      append(summary.findings, p.findings);
      append(summary.equality_hits, p.equality_hits);
    }
    summary.checked_per_n.emplace_back(n, count);
    summary.graphs_checked += count;
  }
  return summary;
}

int resolve_threads(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw PreconditionError("--threads must be at least 1");
    return *flag;
  }
  if (const char* env = std::getenv("DEE_THREADS"); env != nullptr && *env != '\0') {
    const int v = parse_int(env, "DEE_THREADS");
    if (v < 1) throw PreconditionError("DEE_THREADS must be at least 1");
    return v;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

}  // namespace dee
