#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "dee/errors.hpp"
#include "dee/graph.hpp"

using namespace dee;

namespace {

// Independent graph6 decoder: expand the payload into a '0'/'1' string first, then read
// the upper triangle column by column.
std::set<Edge> oracle_decode_graph6(const std::string& s, int& n_out) {
  n_out = s[0] - 63;
  std::string bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int v = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits += ((v >> b) & 1) ? '1' : '0';
  }
  std::set<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n_out; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits.at(k++) == '1') edges.insert({i, j});
    }
  }
  return edges;
}

std::set<Edge> edge_set(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

// Union-find connectivity, independent of the BFS in the library.
bool oracle_connected(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int components = g.order();
  for (const auto& [u, v] : g.edges()) {
    const int a = find(u);
    const int b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph k2 = parse_edge_list("2 1\n0 1");
  CHECK(k2 == generate(family::Complete{2}));

  const Graph k3 = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
  CHECK(k3 == generate(family::Complete{3}));

  const Graph p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3");
  CHECK(p4.size() == 3);
  CHECK(p4 == generate(family::Path{4}));

  CHECK(parse_edge_list("1 0\n").order() == 1);
  CHECK(parse_edge_list("3 2\r\n0 1\r\n1 2\r\n").size() == 2);
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x 1\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3"), ParseError);   // out of range
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1"), ParseError);   // self-loop
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);   // count mismatch
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n-1 2"), ParseError);
}

TEST_CASE("graph6 decoding matches the independent decoder") {
  for (const std::string s : {"A_", "Bw", "D?{", "@", "Ch", "I?h]@eOWG"}) {
    int n = 0;
    const auto expected = oracle_decode_graph6(s, n);
    const Graph g = parse_graph6(s);
    CHECK(g.order() == n);
    CHECK(edge_set(g) == expected);
  }
  CHECK(parse_graph6("A_") == generate(family::Complete{2}));
  CHECK(parse_graph6("Bw") == generate(family::Complete{3}));
  const Graph d = parse_graph6("D?{");
  CHECK(d.order() == 5);
  CHECK(to_graph6(d) == "D?{");
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(generate(family::Complete{2})) == "A_");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(generate(family::Complete{3})) == "Bw");
  CHECK_THROWS_AS(to_graph6(Graph(63)), PreconditionError);
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // truncated
  CHECK_THROWS_AS(parse_graph6("A_ "), ParseError);     // invalid character
  CHECK_THROWS_AS(parse_graph6("A__"), ParseError);     // trailing payload
  CHECK_THROWS_AS(parse_graph6("~?@~"), ParseError);    // long form
}

TEST_CASE("graph6 round trip over every labeled graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = Graph::from_pair_mask(n, mask);
      const std::string s = to_graph6(g);
      REQUIRE(parse_graph6(s) == g);
      int on = 0;
      REQUIRE(oracle_decode_graph6(s, on) == edge_set(g));
    }
  }
}

TEST_CASE("family generation") {
  const Graph k4 = generate(family::Complete{4});
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(is_regular(k4));
  CHECK(k4.degree(0) == 3);

  const Graph c4 = generate(family::CompleteMultipartite{{2, 2}});
  CHECK(c4.size() == 4);
  CHECK(is_regular(c4));
  CHECK(diameter(c4) == 2);

  const Graph petersen = generate(family::Petersen{});
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  CHECK(is_regular(petersen));
  CHECK(petersen.degree(0) == 3);
  CHECK(diameter(petersen) == 2);

  const Graph star = generate(family::Star{5});
  CHECK(star.size() == 4);
  CHECK(degree_profile(star).delta1 == 4);

  CHECK_THROWS_AS(generate(family::CompleteMultipartite{{3}}), PreconditionError);
  CHECK_THROWS_AS(generate(family::CompleteMultipartite{{2, 0}}), PreconditionError);
  CHECK_THROWS_AS(generate(family::Cycle{2}), PreconditionError);
  CHECK_THROWS_AS(generate(family::RandomGnp{5, 1.5, 1}), PreconditionError);
}

TEST_CASE("G(n,p) is deterministic in the seed") {
  const Graph a = generate(family::RandomGnp{20, 0.3, 42});
  const Graph b = generate(family::RandomGnp{20, 0.3, 42});
  const Graph c = generate(family::RandomGnp{20, 0.3, 43});
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(generate(family::RandomGnp{6, 1.0, 7}) == generate(family::Complete{6}));
  CHECK(generate(family::RandomGnp{6, 0.0, 7}).size() == 0);

  // SplitMix64 reference outputs for seed 0.
  std::uint64_t state = 0;
  CHECK(splitmix64_next(state) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64_next(state) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("complement") {
  CHECK(complement(generate(family::Complete{5})).size() == 0);

  const Graph c5 = generate(family::Cycle{5});
  const Graph cc5 = complement(c5);
  CHECK(is_regular(cc5));
  CHECK(cc5.degree(0) == 2);
  CHECK(is_connected(cc5));  // 2-regular and connected on 5 vertices: a 5-cycle

  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = Graph::from_pair_mask(n, mask);
      const Graph h = complement(g);
      REQUIRE(complement(h) == g);
      REQUIRE(g.size() + h.size() == n * (n - 1) / 2);
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(parse_edge_list("4 2\n0 1\n2 3")));
  CHECK(is_connected(generate(family::Path{7})));
}

TEST_CASE("degree profile") {
  auto k4 = degree_profile(generate(family::Complete{4}));
  CHECK(k4.degrees == std::vector<int>{3, 3, 3, 3});
  CHECK(k4.delta1 == 3);
  CHECK(k4.delta2 == 3);

  auto star = degree_profile(generate(family::Star{5}));
  CHECK(star.degrees == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(star.delta1 == 4);
  CHECK(star.delta2 == 1);

  auto p3 = degree_profile(generate(family::Path{3}));
  CHECK(p3.degrees == std::vector<int>{2, 1, 1});
  CHECK(p3.delta2 == 1);

  CHECK_THROWS_AS(degree_profile(Graph(1)), PreconditionError);

  // Every regular graph has delta1 == delta2 == r.
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    const Graph g = Graph::from_pair_mask(6, mask);
    if (!is_regular(g)) continue;
    const auto p = degree_profile(g);
    REQUIRE(p.delta1 == g.degree(0));
    REQUIRE(p.delta2 == g.degree(0));
  }
}

TEST_CASE("diameter") {
  for (int n = 2; n <= 8; ++n) CHECK(diameter(generate(family::Complete{n})) == 1);
  CHECK(diameter(Graph(1)) == 0);
  CHECK(diameter(generate(family::Path{5})) == 4);
  CHECK(diameter(generate(family::Petersen{})) == 2);
  CHECK_THROWS_AS(diameter(parse_edge_list("4 2\n0 1\n2 3")), PreconditionError);
}

TEST_CASE("labeled connected enumeration") {
  // c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)
  const std::vector<std::uint64_t> expected{1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    std::uint64_t previous = 0;
    bool ascending = true;
    for_each_connected(n, [&](std::uint64_t mask, const Graph& g) {
      REQUIRE(oracle_connected(g));
      if (count > 0 && mask <= previous) ascending = false;
      previous = mask;
      ++count;
    });
    CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(ascending);
  }

  const auto n3 = enumerate_connected(3);
  CHECK(n3.size() == 4);
  CHECK(std::count_if(n3.begin(), n3.end(), [](const Graph& g) { return g.size() == 2; }) == 3);

  // Every disconnected mask is rejected.
  std::uint64_t disconnected = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    if (!oracle_connected(Graph::from_pair_mask(4, mask))) ++disconnected;
  }
  CHECK(disconnected == 64 - 38);

  CHECK_THROWS_AS(enumerate_connected(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_connected(9), PreconditionError);
}
