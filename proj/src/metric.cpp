#include "dee/metric.hpp"

#include <algorithm>
#include <string>

#include "dee/errors.hpp"

namespace dee {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {
  if (n < 1 || d_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw PreconditionError("distance matrix dimension mismatch");
  }
}

int DistanceMatrix::max_entry() const { return *std::max_element(d_.begin(), d_.end()); }

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adjacency[static_cast<std::size_t>(v)] = g.neighbors(v);

  std::vector<int> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
    std::size_t head = 0;
    std::size_t tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (int v : adjacency[static_cast<std::size_t>(u)]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (tail != static_cast<std::size_t>(n)) {
      throw PreconditionError("distance matrix undefined: graph is disconnected");
    }
  }
  return DistanceMatrix(n, std::move(d));
}

std::int64_t sum_sq_distances_exact(const DistanceMatrix& dm) {
  std::int64_t total = 0;
  for (int i = 0; i < dm.order(); ++i) {
    for (int j = i + 1; j < dm.order(); ++j) {
      const std::int64_t x = dm.at(i, j);
      total += x * x;
    }
  }
  return total;
}

double sum_sq_distances(const DistanceMatrix& dm) { return static_cast<double>(sum_sq_distances_exact(dm)); }

}  // namespace dee
