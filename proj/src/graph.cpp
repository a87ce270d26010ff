#include "dee/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "dee/errors.hpp"

namespace dee {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw PreconditionError("graph order must be at least 1, got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_pair_mask(int n, std::uint64_t mask) {
  if (n > 1 && n * (n - 1) / 2 > 64) throw PreconditionError("pair mask supports at most 11 vertices");
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n_));
  }
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw PreconditionError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  adj_[index(u, v)] = 1;
  adj_[index(v, u)] = 1;
  ++m_;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[index(v, u)];
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adj_[index(v, u)] != 0) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) && dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  const auto dist = bfs(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("degree profile needs at least 2 vertices");
  DegreeProfile p;
  p.degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  std::sort(p.degrees.begin(), p.degrees.end(), std::greater<>());
  p.delta1 = p.degrees[0];
  p.delta2 = p.degrees[1];
  return p;
}

int diameter(const Graph& g) {
  int rho = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs(g, s)) {
      if (d < 0) throw PreconditionError("diameter undefined for a disconnected graph");
      rho = std::max(rho, d);
    }
  }
  return rho;
}

bool is_regular(const Graph& g) {
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

}  // namespace dee
