#include "dn/combinatorics.hpp"
#include "dn/generators.hpp"
#include "dn/graph.hpp"
#include "dn/graph_io.hpp"
#include "dn/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace dn;

namespace {

Graph c4() { return parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n"); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

bool valid_bipartition(const Graph& g) {
  if (!g.has_bipartition()) return false;
  for (const Edge& e : g.edges()) {
    if (g.in_side_a(e.u) == g.in_side_a(e.v)) return false;
  }
  return true;
}

std::size_t girth(const Graph& g) {
  std::size_t best = SIZE_MAX;
  for (const Edge& e : g.edges()) {
    // shortest u-v path avoiding the edge itself, plus one
    Graph rest(g.n(), [&] {
      std::vector<Edge> r;
      for (const Edge& f : g.edges())
        if (!(f == e)) r.push_back(f);
      return r;
    }());
    const auto d = bfs_distances(rest, e.u)[e.v];
    if (d != SIZE_MAX) best = std::min(best, d + 1);
  }
  return best;
}

}  // namespace

TEST(LoadGraph, ParsesCycle) {
  Graph g = c4();
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 4u);
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_FALSE(g.has_bipartition());
}

TEST(LoadGraph, EdgelessAndBipartition) {
  Graph g = parse_graph("2 0");
  EXPECT_EQ(g.n(), 2u);
  EXPECT_EQ(g.m(), 0u);
  Graph h = parse_graph("4 4\nbipartition 2\n0 2\n0 3\n1 2\n1 3\n");
  ASSERT_TRUE(h.has_bipartition());
  EXPECT_TRUE(h.in_side_a(1));
  EXPECT_FALSE(h.in_side_a(2));
  Graph e = parse_graph("3 0\nbipartition 1\n");
  EXPECT_TRUE(e.has_bipartition());
  EXPECT_EQ(e.side_a().size(), 1u);
}

TEST(LoadGraph, CommentsAndBlankLinesSkipped) {
  Graph g = parse_graph("# seed=4\n\n3 2\n# edges\n0 1\n\n1 2\n");
  EXPECT_EQ(g.m(), 2u);
}

TEST(LoadGraph, ErrorsCarryKindAndLine) {
  auto kind_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      return std::make_pair(e.kind(), std::string(e.what()));
    }
    return std::make_pair(ErrorKind::invalid_argument, std::string("no error"));
  };
  auto [k1, w1] = kind_of("3 1\n0 0\n");
  EXPECT_EQ(k1, ErrorKind::parse);
  EXPECT_NE(w1.find("line 2"), std::string::npos);
  EXPECT_NE(w1.find("self-loop"), std::string::npos);

  auto [k2, w2] = kind_of("3 2\n0 1\n1 0\n");
  EXPECT_NE(w2.find("duplicate"), std::string::npos);
  EXPECT_NE(w2.find("line 3"), std::string::npos);

  auto [k3, w3] = kind_of("3 1\n0 5\n");
  EXPECT_NE(w3.find("out of range"), std::string::npos);

  auto [k4, w4] = kind_of("3 2\n0 1\n");
  EXPECT_NE(w4.find("expected 2 edges"), std::string::npos);

  auto [k5, w5] = kind_of("4 1\nbipartition 2\n0 1\n");
  EXPECT_EQ(k5, ErrorKind::parse);

  auto [k6, w6] = kind_of("x 1\n");
  EXPECT_NE(w6.find("line 1"), std::string::npos);

  auto [k7, w7] = kind_of("2 1\n0 1\n0 1\n");
  EXPECT_NE(w7.find("trailing"), std::string::npos);
}

TEST(LoadGraph, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = bipartite_gnp(5, 7, 0.4, seed);
    Graph back = parse_graph(format_graph(g));
    EXPECT_EQ(back, g);
    Graph h = gnp(9, 0.5, seed);
    EXPECT_EQ(parse_graph(format_graph(h)), h);
  }
}

TEST(LoadGraph, FamilyBlocks) {
  std::istringstream in("3 3\n0 1\n1 2\n0 2\n# next\n4 4\n0 1\n1 2\n2 3\n0 3\n");
  auto family = load_graphs(in);
  ASSERT_EQ(family.size(), 2u);
  EXPECT_EQ(family[1], c4());
}

TEST(WriteGraph, NonPrefixBipartitionRejectedUntilRelabeled) {
  Graph g = c4().with_bipartition({1, 0, 1, 0});
  EXPECT_THROW(format_graph(g), Error);
  InducedSubgraph r = prefix_relabel(g);
  EXPECT_EQ(r.original_id, (std::vector<Vertex>{0, 2, 1, 3}));
  EXPECT_EQ(r.graph.prefix_side_size(), 2u);
  EXPECT_EQ(r.graph.m(), 4u);
}

TEST(GraphInvariants, ConstructorRejectsBadInput) {
  EXPECT_THROW(Graph(3, {Edge(0, 0)}), Error);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), Error);
  EXPECT_THROW(Graph(3, {Edge(0, 1), Edge(1, 0)}), Error);
  try {
    Graph(3, {Edge(0, 1)}, std::vector<std::uint8_t>{1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(CommonNeighborhood, Examples) {
  Graph g = c4();
  EXPECT_EQ(common_neighborhood(g, TSet({0, 2})), (std::vector<Vertex>{1, 3}));
  Graph k33 = complete_bipartite(3, 3);
  EXPECT_EQ(common_neighborhood(k33, TSet({0, 1})), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_THROW(common_neighborhood(g, TSet({0, 9})), Error);
}

TEST(CommonNeighborhood, MatchesNaiveIntersection) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gnp(3 + seed % 8, 0.5, seed);
    for_each_combination(g.n(), 2 + seed % 2, [&](std::span<const std::uint32_t> idx) {
      std::vector<Vertex> s(idx.begin(), idx.end());
      std::vector<Vertex> naive;
      for (Vertex v = 0; v < g.n(); ++v) {
        bool all = true;
        for (Vertex u : s) all = all && g.adjacent(u, v);
        if (all) naive.push_back(v);
      }
      EXPECT_EQ(common_neighborhood(g, s), naive);
      for (Vertex u : s) {
        for (Vertex v : naive) EXPECT_TRUE(g.adjacent(u, v));
      }
      return true;
    });
  }
}

TEST(DegreeStats, Examples) {
  DegreeStats c = degree_stats(c4());
  EXPECT_EQ(c.min_degree, 2u);
  EXPECT_EQ(c.avg_degree, Rational(2));
  EXPECT_EQ(c.radius, Radius::finite(2));

  DegreeStats p = degree_stats(path(4));
  EXPECT_EQ(p.min_degree, 1u);
  EXPECT_EQ(p.avg_degree, Rational(3, 2));
  EXPECT_EQ(p.radius, Radius::finite(2));

  DegreeStats two = degree_stats(Graph(4, {Edge(0, 1), Edge(2, 3)}));
  EXPECT_FALSE(two.radius.is_finite());
  EXPECT_THROW(two.radius.value(), Error);
  std::ostringstream os;
  os << two.radius;
  EXPECT_EQ(os.str(), "inf");
}

TEST(Radius, CompleteFamilies) {
  for (std::size_t t = 2; t <= 6; ++t) EXPECT_EQ(radius(complete_bipartite(t, t)), Radius::finite(2));
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(radius(complete_graph(n)), Radius::finite(1));
  EXPECT_EQ(radius(Graph(1)), Radius::finite(0));
}

TEST(DegreeStats, OrderingInvariant) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gnp(2 + seed % 9, 0.3, seed);
    DegreeStats s = degree_stats(g);
    EXPECT_LE(Rational(s.min_degree), s.avg_degree);
    EXPECT_LE(s.avg_degree, Rational(g.n() - 1));
    const auto d = bfs_distances(g, 0);
    const bool connected = std::none_of(d.begin(), d.end(), [](auto x) { return x == SIZE_MAX; });
    EXPECT_EQ(s.radius.is_finite(), connected);
  }
}

TEST(InducedSubgraph, Examples) {
  Graph k4 = complete_graph(4);
  std::vector<Vertex> w{0, 2, 3};
  InducedSubgraph tri = induced_subgraph(k4, w);
  EXPECT_EQ(tri.graph, complete_graph(3));
  EXPECT_EQ(tri.original_id, w);

  Graph g = gnp(8, 0.5, 3);
  std::vector<Vertex> all(8);
  for (Vertex v = 0; v < 8; ++v) all[v] = v;
  EXPECT_EQ(induced_subgraph(g, all).graph, g);
  EXPECT_EQ(induced_subgraph(g, {}).graph.n(), 0u);

  std::vector<Vertex> bad{9};
  EXPECT_THROW(induced_subgraph(g, bad), Error);
}

TEST(InducedSubgraph, KeepsBipartition) {
  Graph g = complete_bipartite(3, 3);
  std::vector<Vertex> w{1, 4, 5};
  InducedSubgraph s = induced_subgraph(g, w);
  ASSERT_TRUE(s.graph.has_bipartition());
  EXPECT_TRUE(s.graph.in_side_a(0));
  EXPECT_FALSE(s.graph.in_side_a(1));
}

TEST(BipartiteHalf, Examples) {
  Graph c = c4();
  Graph h = bipartite_half(c, 1);
  EXPECT_EQ(h.m(), 4u);
  EXPECT_TRUE(valid_bipartition(h));
  EXPECT_EQ(h.without_bipartition(), c);

  Graph k3 = bipartite_half(complete_graph(3), 5);
  EXPECT_EQ(k3.m(), 2u);
  EXPECT_TRUE(valid_bipartition(k3));

  Graph declared = complete_bipartite(2, 3);
  EXPECT_EQ(bipartite_half(declared, 9), declared);
}

TEST(BipartiteHalf, KeepsHalfTheEdges) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = gnp(1 + seed % 20, 0.2 + 0.1 * (seed % 7), seed);
    Graph h = bipartite_half(g, seed * 31);
    EXPECT_TRUE(valid_bipartition(h));
    EXPECT_GE(2 * h.m(), g.m());
    EXPECT_EQ(h.n(), g.n());
    for (const Edge& e : h.edges()) EXPECT_TRUE(g.adjacent(e.u, e.v));
  }
}

TEST(BipartiteHalf, Deterministic) {
  Graph g = gnp(15, 0.6, 2);
  EXPECT_EQ(bipartite_half(g, 7), bipartite_half(g, 7));
}

TEST(Generators, DeterministicForSeed) {
  EXPECT_EQ(gnp(20, 0.3, 11), gnp(20, 0.3, 11));
  EXPECT_NE(gnp(20, 0.3, 11), gnp(20, 0.3, 12));
  EXPECT_EQ(gnm(20, 40, 5).m(), 40u);
  EXPECT_EQ(gnm(20, 40, 5), gnm(20, 40, 5));
  EXPECT_EQ(bipartite_gnp(6, 6, 0.5, 3), bipartite_gnp(6, 6, 0.5, 3));
}

TEST(Generators, Shapes) {
  EXPECT_EQ(complete_bipartite(3, 3).m(), 9u);
  EXPECT_EQ(complete_graph(25).m(), 300u);
  EXPECT_EQ(cycle_graph(6).m(), 6u);
  EXPECT_THROW(cycle_graph(2), Error);
  EXPECT_THROW(generate(GeneratorKind::gnp, {{"n", 5}, {"p", 1.5}}, 1), Error);
  EXPECT_THROW(generate(GeneratorKind::gnp, {{"n", 5}}, 1), Error);
  EXPECT_THROW(parse_generator_kind("petersen"), Error);
  EXPECT_EQ(generate(parse_generator_kind("complete_bipartite"), {{"a", 2}, {"b", 4}}, 0),
            complete_bipartite(2, 4));
}

TEST(Generators, Hst11IsFourCycle) {
  Graph h = h_st(1, 1);
  EXPECT_EQ(h.n(), 4u);
  EXPECT_EQ(h.m(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(h.degree(v), 2u);
  EXPECT_EQ(radius(h), Radius::finite(2));
}

TEST(Generators, Hst22IsCube) {
  Graph h = h_st(2, 2);
  EXPECT_EQ(h.n(), 8u);
  EXPECT_EQ(h.m(), 12u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(h.degree(v), 3u);
  EXPECT_TRUE(valid_bipartition(h));
  EXPECT_EQ(girth(h), 4u);
  Graph q = hypercube_q3();
  EXPECT_TRUE(valid_bipartition(q));
  EXPECT_EQ(girth(q), 4u);
  EXPECT_EQ(q.m(), 12u);
}

TEST(Generators, HstShapeProperty) {
  for (std::size_t s = 1; s <= 4; ++s) {
    for (std::size_t t = 1; t <= 4; ++t) {
      Graph h = h_st(s, t);
      EXPECT_EQ(h.n(), 2 * (s + t));
      EXPECT_EQ(h.side_a().size(), s + t);
      EXPECT_TRUE(valid_bipartition(h));
      EXPECT_EQ(h.m(), 2 * s * t + s + t);
      for (Vertex v = 0; v < h.n(); ++v) {
        EXPECT_TRUE(h.degree(v) == t + 1 || h.degree(v) == s + 1);
      }
      // x_i y_i and x'_j y'_j form the joining (s+t)-matching.
      for (Vertex i = 0; i < s; ++i) EXPECT_TRUE(h.adjacent(i, static_cast<Vertex>(s + 2 * t + i)));
      for (Vertex j = 0; j < t; ++j) EXPECT_TRUE(h.adjacent(static_cast<Vertex>(s + j), static_cast<Vertex>(s + t + j)));
    }
  }
}

TEST(Combinatorics, BinomialAndRanker) {
  EXPECT_EQ(binomial(25, 2), 300);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial_u64(60, 30), 118264581564861424ULL);
  EXPECT_THROW(binomial_u64(200, 100), Error);

  CombinationRanker r(7, 3);
  EXPECT_EQ(r.count(), 35u);
  std::uint64_t expected = 0;
  for_each_combination(7, 3, [&](std::span<const std::uint32_t> idx) {
    EXPECT_EQ(r.rank(idx), expected++);
    return true;
  });
  EXPECT_EQ(expected, 35u);
}

TEST(Combinatorics, AccumulatorCarries) {
  CountAccumulator acc;
  acc.add(UINT64_MAX);
  acc.add(UINT64_MAX);
  acc.add(2);
  EXPECT_EQ(acc.value(), BigInt(UINT64_MAX) * 2 + 2);
}

TEST(Rng, DerivedStreamsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t k = 0; k < 100; ++k) seen.insert(derive_seed(42, k));
  EXPECT_EQ(seen.size(), 100u);
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.below(17), b.below(17));
}
