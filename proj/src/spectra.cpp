#include "dee/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "dee/errors.hpp"

namespace dee {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 1) throw PreconditionError("matrix order must be at least 1");
  a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double SymMatrix::frobenius_sq() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return s;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

SymMatrix to_sym_matrix(const DistanceMatrix& dm) {
  SymMatrix a(dm.order());
  for (int i = 0; i < dm.order(); ++i) {
    for (int j = i + 1; j < dm.order(); ++j) a.set(i, j, static_cast<double>(dm.at(i, j)));
  }
  return a;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double x : values_) s += x;
  return s;
}

double Spectrum::sum_sq() const {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return s;
}

Spectrum distance_spectrum(const Graph& g) { return eig_sym(to_sym_matrix(distance_matrix(g))); }

Spectrum adjacency_spectrum(const Graph& g) { return eig_sym(adjacency_matrix(g)); }

int count_positive(const Spectrum& s) {
  return static_cast<int>(std::count_if(s.values().begin(), s.values().end(), [](double x) { return x > kZeroThreshold; }));
}

Lemma1Residuals lemma1_check(const Spectrum& s, const DistanceMatrix& dm) {
  const double twice = 2.0 * sum_sq_distances(dm);
  return {std::abs(s.sum()), std::abs(s.sum_sq() - twice), std::max(1.0, twice)};
}

namespace {

constexpr double kRegularTol = 1e-8;

void check_regular_input(const Spectrum& adj, int n, int r, const char* op) {
  if (static_cast<int>(adj.size()) != n) {
    throw PreconditionError(std::string(op) + ": spectrum length " + std::to_string(adj.size()) + " != n = " + std::to_string(n));
  }
  if (std::abs(adj.largest() - r) > kRegularTol) {
    throw PreconditionError(std::string(op) + ": largest adjacency eigenvalue " + std::to_string(adj.largest()) +
                            " is inconsistent with degree r = " + std::to_string(r));
  }
}

Spectrum shifted_regular(const Spectrum& adj, double head, double shift) {
  std::vector<double> out;
  out.reserve(adj.size());
  out.push_back(head);
  for (std::size_t i = 1; i < adj.size(); ++i) out.push_back(shift - adj[i]);
  return Spectrum(std::move(out));
}

}  // namespace

Spectrum lemma2_spectrum(const Spectrum& adj_spectrum, int n, int r) {
  check_regular_input(adj_spectrum, n, r, "lemma2_spectrum");
  return shifted_regular(adj_spectrum, 2.0 * n - 2.0 - r, -2.0);
}

Spectrum complement_adj_spectrum(const Spectrum& adj_spectrum, int n, int r) {
  check_regular_input(adj_spectrum, n, r, "complement_adj_spectrum");
  return shifted_regular(adj_spectrum, static_cast<double>(n - r - 1), -1.0);
}

std::vector<std::pair<double, int>> group_multiplicities(const Spectrum& s, double tol) {
  std::vector<std::pair<double, int>> groups;
  for (double x : s.values()) {
    if (!groups.empty() && std::abs(groups.back().first - x) <= tol) {
      ++groups.back().second;
    } else {
      groups.emplace_back(x, 1);
    }
  }
  return groups;
}

}  // namespace dee
