#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dee {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with a dense adjacency relation.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws PreconditionError on self-loops, out-of-range endpoints and duplicates.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Bit k of mask selects the k-th vertex pair in graph6 order:
  /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
  static Graph from_pair_mask(int n, std::uint64_t mask);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;

  /// Adds {u,v}; throws PreconditionError on self-loop, range, or duplicate.
  void add_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
};

struct DegreeProfile {
  std::vector<int> degrees;  // non-increasing
  int delta1 = 0;
  int delta2 = 0;  // second entry of `degrees`; equals delta1 on ties
};

namespace family {
struct Complete { int n; };
struct CompleteMultipartite { std::vector<int> parts; };
struct Cycle { int n; };
struct Path { int n; };
/// K_{1,n-1}: n vertices in total, vertex 0 is the centre.
struct Star { int n; };
struct Petersen {};
struct RandomGnp {
  int n;
  double p;
  std::uint64_t seed;
};
}  // namespace family

using GraphFamily = std::variant<family::Complete, family::CompleteMultipartite, family::Cycle,
                                 family::Path, family::Star, family::Petersen, family::RandomGnp>;

/// SplitMix64 step. RandomGnp draws one value per vertex pair (i<j, i-major order)
/// and keeps the edge when (value >> 11) * 2^-53 < p.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Parsing and serialization.
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

Graph generate(const GraphFamily& family);
std::string describe(const GraphFamily& family);

Graph complement(const Graph& g);
bool is_connected(const Graph& g);
DegreeProfile degree_profile(const Graph& g);
int diameter(const Graph& g);

bool is_regular(const Graph& g);
bool is_complete(const Graph& g);

/// Largest supported order for labeled enumeration.
inline constexpr int kMaxEnumerationOrder = 8;

/// Number of adjacency masks for labeled graphs on n vertices: 2^(n(n-1)/2).
std::uint64_t pair_mask_count(int n);

/// True iff the graph encoded by `mask` (see Graph::from_pair_mask) is connected.
bool pair_mask_connected(int n, std::uint64_t mask);

/// Visits every connected labeled graph on n vertices whose mask lies in [first, last),
/// in ascending mask order. Throws PreconditionError unless 1 <= n <= 8.
void for_each_connected(int n, std::uint64_t first, std::uint64_t last,
                        const std::function<void(std::uint64_t mask, const Graph&)>& visit);

/// Whole-population convenience over the full mask range.
void for_each_connected(int n, const std::function<void(std::uint64_t mask, const Graph&)>& visit);

/// Materialized enumeration; intended for n <= 6.
std::vector<Graph> enumerate_connected(int n);

}  // namespace dee
