#pragma once

#include <span>
#include <vector>

#include "dee/graph.hpp"
#include "dee/metric.hpp"

namespace dee {

/// Dense real symmetric matrix. Writes go through set(), which mirrors the entry.
class SymMatrix {
 public:
  explicit SymMatrix(int n);

  int order() const { return n_; }
  double at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double value) {
    a_[idx(i, j)] = value;
    a_[idx(j, i)] = value;
  }

  double trace() const;
  double frobenius_sq() const;
  const std::vector<double>& entries() const { return a_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> a_;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix to_sym_matrix(const DistanceMatrix& dm);

/// Real eigenvalues sorted non-increasing.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the given values non-increasing.
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double largest() const { return values_.front(); }
  double least() const { return values_.back(); }
  double sum() const;
  double sum_sq() const;
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// Householder tridiagonalization followed by implicit-shift QL.
/// Throws ConvergenceError if an eigenvalue needs more than kMaxQlSweeps sweeps.
Spectrum eig_sym(const SymMatrix& mat);

inline constexpr int kMaxQlSweeps = 50;
inline constexpr double kZeroThreshold = 1e-9;

Spectrum distance_spectrum(const Graph& g);
Spectrum adjacency_spectrum(const Graph& g);

/// n+: number of eigenvalues strictly above kZeroThreshold.
int count_positive(const Spectrum& s);

struct Lemma1Residuals {
  double residual_sum;    // |sum lambda_i|
  double residual_sumsq;  // |sum lambda_i^2 - 2 sum_{i<j} d_ij^2|
  double scale;           // max(1, 2 sum_{i<j} d_ij^2)
  bool within(double rel_tol = 1e-9) const {
    return residual_sum <= rel_tol * scale && residual_sumsq <= rel_tol * scale;
  }
};

Lemma1Residuals lemma1_check(const Spectrum& s, const DistanceMatrix& dm);

/// Distance spectrum of an r-regular graph of diameter <= 2 from its adjacency spectrum:
/// {2n-2-r} together with -2 - lambda_i(A) for i >= 2.
Spectrum lemma2_spectrum(const Spectrum& adj_spectrum, int n, int r);

/// Adjacency spectrum of the complement of an r-regular graph:
/// {n-r-1} together with -1 - lambda_i(A) for i >= 2.
Spectrum complement_adj_spectrum(const Spectrum& adj_spectrum, int n, int r);

/// Groups values within `tol` of each other into (value, multiplicity) pairs. Reporting only.
std::vector<std::pair<double, int>> group_multiplicities(const Spectrum& s, double tol = 1e-8);

}  // namespace dee
