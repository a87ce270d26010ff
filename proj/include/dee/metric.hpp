#pragma once

#include <cstdint>
#include <vector>

#include "dee/graph.hpp"

namespace dee {

/// All-pairs hop distances of a connected graph, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries);

  int order() const { return n_; }
  int at(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  /// Largest entry, i.e. the diameter.
  int max_entry() const;

  const std::vector<int>& entries() const { return d_; }

 private:
  int n_;
  std::vector<int> d_;
};

/// One BFS per source. Throws PreconditionError when some pair is unreachable.
DistanceMatrix distance_matrix(const Graph& g);

/// Sum over unordered pairs i<j of d_ij^2, accumulated exactly in integers.
std::int64_t sum_sq_distances_exact(const DistanceMatrix& dm);
double sum_sq_distances(const DistanceMatrix& dm);

}  // namespace dee
