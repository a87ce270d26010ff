#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dee/errors.hpp"
#include "dee/metric.hpp"

using namespace dee;

TEST_CASE("distance matrix examples") {
  const auto k3 = distance_matrix(generate(family::Complete{3}));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(k3.at(i, j) == (i == j ? 0 : 1));
  }

  const auto p3 = distance_matrix(generate(family::Path{3}));
  CHECK(p3.at(0, 2) == 2);
  CHECK(p3.at(0, 1) == 1);
  CHECK(p3.at(1, 2) == 1);

  const auto c5 = distance_matrix(generate(family::Cycle{5}));
  for (int i = 0; i < 5; ++i) {
    std::vector<int> row;
    for (int j = 0; j < 5; ++j) row.push_back(c5.at(i, j));
    std::sort(row.begin(), row.end());
    CHECK(row == std::vector<int>{0, 1, 1, 2, 2});
  }

  CHECK_THROWS_AS(distance_matrix(parse_edge_list("4 2\n0 1\n2 3")), PreconditionError);
}

TEST_CASE("sum of squared distances") {
  CHECK(sum_sq_distances(distance_matrix(generate(family::Complete{4}))) == 6.0);
  CHECK(sum_sq_distances(distance_matrix(generate(family::Path{3}))) == 6.0);
  CHECK(sum_sq_distances(distance_matrix(generate(family::Cycle{5}))) == 25.0);
  CHECK(sum_sq_distances_exact(distance_matrix(Graph(1))) == 0);
}

TEST_CASE("distance matrix invariants over all connected graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_connected(n, [&](std::uint64_t, const Graph& g) {
      const auto dm = distance_matrix(g);
      const int rho = diameter(g);
      REQUIRE(dm.max_entry() == rho);
      std::int64_t trace_d2 = 0;  // trace(D^2) by explicit multiplication
      for (int i = 0; i < n; ++i) {
        REQUIRE(dm.at(i, i) == 0);
        for (int j = 0; j < n; ++j) {
          REQUIRE(dm.at(i, j) == dm.at(j, i));
          if (i != j) REQUIRE(dm.at(i, j) >= 1);
          REQUIRE(dm.at(i, j) <= n - 1);
          REQUIRE((dm.at(i, j) == 1) == g.adjacent(i, j));
          trace_d2 += static_cast<std::int64_t>(dm.at(i, j)) * dm.at(j, i);
          for (int k = 0; k < n; ++k) REQUIRE(dm.at(i, k) <= dm.at(i, j) + dm.at(j, k));
        }
      }
      const double ssq = sum_sq_distances(dm);
      REQUIRE(2 * sum_sq_distances_exact(dm) == trace_d2);
      REQUIRE(rho * std::sqrt(n * (n - 1.0)) >= std::sqrt(2.0 * ssq) - 1e-12);
    });
  }
}
