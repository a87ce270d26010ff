// Eigenvalues of a dense symmetric matrix: Householder reduction to tridiagonal
// form, then QL with implicit Wilkinson-style shifts. Eigenvectors are never formed.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dee/errors.hpp"
#include "dee/spectra.hpp"

namespace dee {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples rows i-1 and i; off[0] unused
};

// Householder reduction operating on the lower triangle of a row-major copy.
Tridiagonal householder_reduce(const SymMatrix& mat) {
  const int n = mat.order();
  std::vector<double> a = mat.entries();
  auto A = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);

  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        e[static_cast<std::size_t>(i)] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[static_cast<std::size_t>(i)] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[static_cast<std::size_t>(j)] = g / h;
          f += e[static_cast<std::size_t>(j)] * A(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          g = e[static_cast<std::size_t>(j)] - hh * f;
          e[static_cast<std::size_t>(j)] = g;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[static_cast<std::size_t>(k)] + g * A(i, k);
        }
      }
    } else {
      e[static_cast<std::size_t>(i)] = A(i, l);
    }
  }
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = A(i, i);
  e[0] = 0.0;
  return {std::move(d), std::move(e)};
}

// Implicit-shift QL on the tridiagonal (d, e); eigenvalues are left in d.
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto D = [&](int i) -> double& { return d[static_cast<std::size_t>(i)]; };
  auto E = [&](int i) -> double& { return e[static_cast<std::size_t>(i)]; };

  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(D(m)) + std::abs(D(m + 1));
        if (std::abs(E(m)) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxQlSweeps) {
        throw ConvergenceError("QL iteration did not converge for eigenvalue " + std::to_string(l) + " within " +
                               std::to_string(kMaxQlSweeps) + " sweeps");
      }
      double g = (D(l + 1) - D(l)) / (2.0 * E(l));
      double r = std::hypot(g, 1.0);
      g = D(m) - D(l) + E(l) / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool deflated = false;
      for (; i >= l; --i) {
        const double f = s * E(i);
        const double b = c * E(i);
        r = std::hypot(f, g);
        E(i + 1) = r;
        if (r == 0.0) {
          // Underflow: the problem splits; restart from l.
          D(i + 1) -= p;
          E(m) = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = D(i + 1) - p;
        r = (D(i) - g) * s + 2.0 * c * b;
        p = s * r;
        D(i + 1) = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      D(l) -= p;
      E(l) = g;
      E(m) = 0.0;
    } while (m != l);
  }
}

}  // namespace

Spectrum eig_sym(const SymMatrix& mat) {
  if (mat.order() == 1) return Spectrum({mat.at(0, 0)});
  auto [d, e] = householder_reduce(mat);
  ql_implicit(d, e);
  return Spectrum(std::move(d));
}

}  // namespace dee
