#include <numeric>
#include <string>

#include "dee/errors.hpp"
#include "dee/graph.hpp"

namespace dee {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Generator {
  Graph operator()(const family::Complete& f) const {
    if (f.n < 1) throw PreconditionError("complete graph needs n >= 1");
    Graph g(f.n);
    for (int u = 0; u < f.n; ++u) {
      for (int v = u + 1; v < f.n; ++v) g.add_edge(u, v);
    }
    return g;
  }

  Graph operator()(const family::CompleteMultipartite& f) const {
    if (f.parts.size() < 2) throw PreconditionError("complete multipartite graph needs at least 2 parts");
    for (int s : f.parts) {
      if (s < 1) throw PreconditionError("complete multipartite part sizes must be >= 1");
    }
    const int n = std::accumulate(f.parts.begin(), f.parts.end(), 0);
    std::vector<int> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < f.parts.size(); ++p) part_of.insert(part_of.end(), static_cast<std::size_t>(f.parts[p]), static_cast<int>(p));
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.add_edge(u, v);
      }
    }
    return g;
  }

  Graph operator()(const family::Cycle& f) const {
    if (f.n < 3) throw PreconditionError("cycle needs n >= 3");
    Graph g(f.n);
    for (int v = 0; v < f.n; ++v) g.add_edge(v, (v + 1) % f.n);
    return g;
  }

  Graph operator()(const family::Path& f) const {
    if (f.n < 1) throw PreconditionError("path needs n >= 1");
    Graph g(f.n);
    for (int v = 0; v + 1 < f.n; ++v) g.add_edge(v, v + 1);
    return g;
  }

  Graph operator()(const family::Star& f) const {
    if (f.n < 2) throw PreconditionError("star needs n >= 2");
    Graph g(f.n);
    for (int v = 1; v < f.n; ++v) g.add_edge(0, v);
    return g;
  }

  Graph operator()(const family::Petersen&) const {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
      g.add_edge(i, i + 5);                // spokes
      g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
  }

  Graph operator()(const family::RandomGnp& f) const {
    if (f.n < 1) throw PreconditionError("G(n,p) needs n >= 1");
    if (!(f.p >= 0.0 && f.p <= 1.0)) throw PreconditionError("G(n,p) needs 0 <= p <= 1");
    std::uint64_t state = f.seed;
    Graph g(f.n);
    for (int i = 0; i < f.n; ++i) {
      for (int j = i + 1; j < f.n; ++j) {
        const double u = static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
        if (u < f.p) g.add_edge(i, j);
      }
    }
    return g;
  }
};

struct Describer {
  std::string operator()(const family::Complete& f) const { return "complete(" + std::to_string(f.n) + ")"; }
  std::string operator()(const family::CompleteMultipartite& f) const {
    std::string s = "multipartite(";
    for (std::size_t i = 0; i < f.parts.size(); ++i) s += (i ? "," : "") + std::to_string(f.parts[i]);
    return s + ")";
  }
  std::string operator()(const family::Cycle& f) const { return "cycle(" + std::to_string(f.n) + ")"; }
  std::string operator()(const family::Path& f) const { return "path(" + std::to_string(f.n) + ")"; }
  std::string operator()(const family::Star& f) const { return "star(" + std::to_string(f.n) + ")"; }
  std::string operator()(const family::Petersen&) const { return "petersen"; }
  std::string operator()(const family::RandomGnp& f) const {
    return "gnp(" + std::to_string(f.n) + "," + std::to_string(f.p) + "," + std::to_string(f.seed) + ")";
  }
};

}  // namespace

Graph generate(const GraphFamily& family) { return std::visit(Generator{}, family); }

std::string describe(const GraphFamily& family) { return std::visit(Describer{}, family); }

}  // namespace dee
