#include "dn/combinatorics.hpp"
#include "dn/generators.hpp"
#include "dn/graph_io.hpp"
#include "dn/regularization.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace dn;

namespace {

Rational r_of(std::size_t i) {
  if (i == 0) return 0;
  Rational x(1, 4);
  for (std::size_t k = 0; k < i; ++k) x *= 2;
  return x / (i * i);
}

// Straight scan: first i >= 2 with |A_i| * 2^i >= |side|, capped at i = 80.
std::optional<std::pair<std::size_t, std::size_t>> naive_select(const Graph& g, bool side_a,
                                                                const Rational& base) {
  std::vector<Vertex> side;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.in_side_a(v) == side_a) side.push_back(v);
  const Rational unit = base / side.size();
  for (std::size_t i = 2; i <= 80; ++i) {
    std::size_t k = 0;
    for (Vertex v : side) {
      const Rational d(g.degree(v));
      k += d >= r_of(i - 1) * unit && d < r_of(i) * unit;
    }
    if (Rational(k) >= Rational(side.size()) / Rational(BigInt(1) << i)) return std::make_pair(i, k);
  }
  return std::nullopt;
}

// 3-regular bipartite circulant with sides of size s.
Graph circulant(std::size_t s) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < s; ++a)
    for (Vertex d : {0u, 1u, 3u}) e.emplace_back(a, static_cast<Vertex>(s + (a + d) % s));
  std::vector<std::uint8_t> side(2 * s, 0);
  std::fill_n(side.begin(), s, 1);
  return Graph(2 * s, std::move(e), std::move(side));
}

Graph heawood() {
  const int lines[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  std::vector<Edge> e;
  for (Vertex l = 0; l < 7; ++l)
    for (int p : lines[l]) e.emplace_back(static_cast<Vertex>(p), 7 + l);
  return Graph(14, e).with_bipartition([] {
    std::vector<std::uint8_t> side(14, 0);
    for (int v = 0; v < 7; ++v) side[v] = 1;
    return side;
  }());
}

Graph bipartite_of(const Graph& g) { return bipartite_half(g, 0); }

std::size_t naive_link_edges(const Graph& g, const std::vector<Edge>& m) {
  std::vector<Vertex> va, vb, all;
  for (const Edge& e : m) {
    for (Vertex v : {e.u, e.v}) {
      (g.in_side_a(v) ? va : vb).push_back(v);
      all.push_back(v);
    }
  }
  auto joined_to_all = [&](Vertex x, const std::vector<Vertex>& s) {
    if (std::find(all.begin(), all.end(), x) != all.end()) return false;
    for (Vertex y : s)
      if (!g.adjacent(x, y)) return false;
    return true;
  };
  std::vector<Vertex> x_side, y_side;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (joined_to_all(v, vb)) x_side.push_back(v);
    if (joined_to_all(v, va)) y_side.push_back(v);
  }
  std::size_t k = 0;
  for (Vertex x : x_side)
    for (Vertex y : y_side) k += g.adjacent(x, y);
  return k;
}

RegularizationResult wrap(const Graph& g) {
  RegularizationResult r;
  std::vector<Vertex> all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  r.g_prime = induced_subgraph(g, all);
  r.e_prime = g.m();
  r.host_edges = g.m();
  r.host_order = g.n();
  return r;
}

}  // namespace

TEST(DegreeRatio, Values) {
  EXPECT_EQ(degree_ratio(0), 0);
  EXPECT_EQ(degree_ratio(1), Rational(1, 2));
  EXPECT_EQ(degree_ratio(2), Rational(1, 4));
  EXPECT_EQ(degree_ratio(8), 1);
  EXPECT_EQ(degree_ratio(9), Rational(128, 81));
  for (std::size_t i = 0; i <= 40; ++i) EXPECT_EQ(degree_ratio(i), r_of(i));
}

TEST(DegreeClassSelect, BiregularLandsInClassNine) {
  const Graph g = circulant(512);
  const DegreeClass c = degree_class_select(g, Side::A, Rational(g.m()));
  EXPECT_EQ(c.index, 9u);
  EXPECT_EQ(c.members, (std::vector<Vertex>{0}));
  EXPECT_EQ(c.class_size, 512u);
}

TEST(DegreeClassSelect, ClassTwoIsAlwaysEmpty) {
  // [r_1 u, r_2 u) = [u/2, u/4) holds nothing, so i = 2 never qualifies.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = bipartite_gnp(64, 64, 0.1 + 0.02 * seed, seed);
    if (g.m() == 0) continue;
    try {
      EXPECT_NE(degree_class_select(g, Side::A, Rational(g.m())).index, 2u);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::no_qualifying_index);
    }
  }
}

TEST(DegreeClassSelect, MatchesNaiveScan) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t a = 8 + seed % 40, b = 8 + (seed * 7) % 40;
    const Graph g = bipartite_gnp(a, b, 0.05 + 0.015 * seed, seed);
    if (g.m() == 0) continue;
    for (bool side_a : {true, false}) {
      const Rational base = Rational(g.m()) / (1 + seed % 3);
      const auto expect = naive_select(g, side_a, base);
      try {
        const DegreeClass c = degree_class_select(g, side_a ? Side::A : Side::B, base);
        ASSERT_TRUE(expect.has_value()) << seed;
        EXPECT_EQ(c.index, expect->first);
        EXPECT_EQ(c.class_size, expect->second);
        EXPECT_EQ(c.members.size(), (side_a ? a : b) >> c.index);
        for (Vertex v : c.members) {
          EXPECT_GE(Rational(g.degree(v)), c.lower);
          EXPECT_LT(Rational(g.degree(v)), c.upper);
        }
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::no_qualifying_index);
        // Either nothing qualified or the floored selection was empty.
        if (expect) {
          EXPECT_EQ((side_a ? a : b) >> expect->first, 0u) << seed;
        }
      }
    }
  }
}

TEST(DegreeClassSelect, LowDegreesOnlyFromA1) {
  // Half of A has degree 1, the other half degree 0.
  std::vector<Edge> e;
  for (Vertex a = 0; a < 32; a += 2) e.emplace_back(a, 32 + a);
  std::vector<std::uint8_t> side(64, 0);
  for (int v = 0; v < 32; ++v) side[v] = 1;
  const Graph g(64, e, side);
  const auto expect = naive_select(g, true, Rational(g.m()));
  try {
    const DegreeClass c = degree_class_select(g, Side::A, Rational(g.m()));
    ASSERT_TRUE(expect);
    EXPECT_EQ(c.index, expect->first);
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::no_qualifying_index);
  }
}

TEST(Regularize, SmallSidesGiveStructuredError) {
  try {
    regularize(complete_bipartite(16, 16));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_qualifying_index);
  }
  EXPECT_THROW(regularize(cycle_graph(5)), Error);
}

TEST(Regularize, DenseSeededGraphsSatisfyEveryInvariant) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = bipartite_gnp(512, 512, 0.7 + 0.05 * seed, seed);
    const RegularizationResult r = regularize(g);
    EXPECT_TRUE(r.verified());
    EXPECT_EQ(r.a_prime.size(), 512u >> r.i);
    EXPECT_EQ(r.b_prime.size(), 512u >> r.j);
    std::size_t recount = 0;
    for (Vertex a : r.a_prime)
      for (Vertex b : r.b_prime) recount += g.adjacent(a, b);
    EXPECT_EQ(recount, r.e_prime);
    EXPECT_GE(Rational(recount) * 64 * r.i * r.i * r.j * r.j, Rational(g.m()));
    const Rational unit_a = Rational(g.m()) / 512;
    for (Vertex a : r.a_prime) {
      EXPECT_GE(Rational(g.degree(a)), r_of(r.i - 1) * unit_a);
      EXPECT_LT(Rational(g.degree(a)), r_of(r.i) * unit_a);
    }
    const Rational unit_b = Rational(g.m()) / (8 * r.i * r.i) / 512;
    for (Vertex b : r.b_prime) {
      std::size_t d = 0;
      for (Vertex a : r.a_prime) d += g.adjacent(a, b);
      EXPECT_GE(Rational(d), r_of(r.j - 1) * unit_b);
      EXPECT_LT(Rational(d), r_of(r.j) * unit_b);
    }
  }
}

TEST(Regularize, Serialization) {
  const Graph g = bipartite_gnp(512, 512, 0.9, 1);
  const RegularizationResult r = regularize(g);
  std::ostringstream os;
  write_regularization(os, r);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# host ids:", 0), 0u);
  std::getline(in, line);
  std::ostringstream expect;
  expect << r.i << ' ' << r.j << ' ' << r.a_prime.size() << ' ' << r.b_prime.size() << ' ' << r.e_prime;
  EXPECT_EQ(line, expect.str());
  EXPECT_EQ(load_graph(in), r.g_prime.graph);
}

TEST(ThresholdFacts, ExactSweep) {
  const ThresholdFacts f = threshold_facts(200);
  EXPECT_TRUE(f.r8_is_one);
  EXPECT_EQ(f.argmax_square, 6u);
  EXPECT_EQ(f.argmax_quartic, 12u);
  EXPECT_TRUE(f.square_below_5);
  EXPECT_TRUE(f.quartic_below_328);
  // 12^4 / 2^6 = 324 is the maximum.
  EXPECT_EQ(Rational(power(BigInt(12), 4), 64), 324);
}

TEST(SpiderReport, EdgelessAndBiclique) {
  Graph empty(4);
  empty = empty.with_bipartition({1, 1, 0, 0});
  SpiderH1tReport e = spider_vs_h1t_report(wrap(empty), 2, 1);
  EXPECT_EQ(e.h1t, 0);
  EXPECT_EQ(e.spiders, 0);
  EXPECT_FALSE(e.ratio);
  EXPECT_FALSE(e.hypothesis_met);

  const Graph k = complete_bipartite(8, 8);
  SpiderH1tReport r = spider_vs_h1t_report(wrap(k), 2, 1);
  EXPECT_EQ(r.h1t, oracle::copies(oracle::hst(1, 2), k));
  EXPECT_EQ(r.spiders, oracle::copies(oracle::spider(2), k));
  ASSERT_TRUE(r.ratio);
  EXPECT_EQ(*r.ratio, Rational(r.h1t, r.spiders));
  EXPECT_FALSE(r.hypothesis_met);
}

TEST(HeavyLight, Examples) {
  for (const auto& w : classify_heavy_light(cycle_graph(4).with_bipartition({1, 0, 1, 0}), 1)) {
    EXPECT_EQ(w.link_edges, 1u);
    EXPECT_EQ(w.label, Weight::light);
  }
  for (const auto& w : classify_heavy_light(complete_bipartite(1, 5), 1)) {
    EXPECT_EQ(w.link_edges, 0u);
    EXPECT_EQ(w.label, Weight::light);
  }
  const Graph q3 = bipartite_of(hypercube_q3());
  const auto labels = classify_heavy_light(q3, 2);
  EXPECT_EQ(BigInt(labels.size()), count_t_matchings(q3, 2).count);
  for (const auto& w : labels) {
    const std::vector<Edge> m(w.matching.edges().begin(), w.matching.edges().end());
    EXPECT_EQ(w.link_edges, naive_link_edges(q3, m));
    EXPECT_EQ(w.label == Weight::heavy, w.link_edges > 16);
  }
}

TEST(HeavyLight, RandomRecount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = bipartite_gnp(5, 5, 0.8, seed);
    for (std::size_t t = 1; t <= 2; ++t) {
      for (const auto& w : classify_heavy_light(g, t)) {
        const std::vector<Edge> m(w.matching.edges().begin(), w.matching.edges().end());
        EXPECT_EQ(w.link_edges, naive_link_edges(g, m));
      }
    }
  }
  EXPECT_THROW(classify_heavy_light(complete_bipartite(5, 5), 2, 10), Error);
}

TEST(ClaimBounds, HttFreeGraphs) {
  for (const Graph& g : {bipartite_of(cycle_graph(6)), bipartite_of(cycle_graph(8)), heawood()}) {
    const ClaimReport rep = claim_bounds_check(g, 2);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.anchors, g.m());
  }
}

TEST(ClaimBounds, Preconditions) {
  EXPECT_THROW(claim_bounds_check(bipartite_of(hypercube_q3()), 2), Error);
  EXPECT_THROW(claim_bounds_check(heawood(), 1), Error);
  EXPECT_THROW(claim_bounds_check(cycle_graph(6), 2), Error);
}
