#include "dn/combinatorics.hpp"
#include "dn/counting.hpp"
#include "dn/generators.hpp"
#include "dn/graph_io.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace dn;

namespace {

Graph c4() { return cycle_graph(4); }
Graph c4_sided() { return cycle_graph(4).with_bipartition({1, 0, 1, 0}); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

// Seeded sample used by the oracle-equivalence properties.
std::vector<Graph> sample(std::size_t count, std::size_t max_n) {
  std::vector<Graph> out;
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(gnp(2 + i % (max_n - 1), ps[i % 3], 1000 + i));
  }
  return out;
}

std::vector<Graph> bipartite_sample(std::size_t count) {
  std::vector<Graph> out;
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(bipartite_gnp(1 + i % 5, 1 + (i / 5) % 5, ps[i % 3], 2000 + i));
  }
  return out;
}

}  // namespace

TEST(Stars, Examples) {
  EXPECT_EQ(count_stars(c4(), 2), 4);
  EXPECT_EQ(count_stars(complete_bipartite(1, 3), 3), 1);
  EXPECT_THROW(count_stars(c4(), 0), Error);
  Graph g = gnp(9, 0.5, 1);
  EXPECT_EQ(count_stars(g, 2), oracle::stars(g, 2));
}

TEST(Bicliques, Examples) {
  EXPECT_EQ(count_bicliques(complete_bipartite(3, 3), 2).count, 9);
  EXPECT_EQ(count_bicliques(c4(), 2).count, 1);
  CountReport k25 = count_bicliques(complete_graph(25), 2);
  EXPECT_EQ(k25.count, binomial(25, 2) * binomial(23, 2) / 2);
  EXPECT_EQ(k25.count, 37950);
  EXPECT_EQ(k25.bound_value, Rational(2592));
  EXPECT_EQ(k25.bound_value, Rational(power(BigInt(300), 4), 8 * power(BigInt(25), 4)));
  EXPECT_TRUE(k25.hypotheses_met);
  EXPECT_TRUE(k25.bound_holds());
  EXPECT_EQ(count_bicliques(complete_graph(9), 2).count,
            oracle::copies(oracle::biclique(2), complete_graph(9)));
}

TEST(Bicliques, ConstantMatchesClosedForm) {
  EXPECT_EQ(biclique_constant(1), Rational(1, 8));
  EXPECT_EQ(biclique_constant(2), Rational(1, 8));
  EXPECT_EQ(biclique_constant(3), Rational(8, 36));
}

TEST(Bicliques, CapIsEnforced) {
  CountCaps caps;
  caps.max_tsets = 10;
  try {
    count_bicliques(complete_graph(6), 2, caps);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}

TEST(Matchings, Examples) {
  EXPECT_EQ(count_t_matchings(c4(), 2).count, 2);
  EXPECT_EQ(count_t_matchings(complete_bipartite(3, 3), 3).count, 6);
  EXPECT_EQ(count_t_matchings(Graph(2, {Edge(0, 1)}), 1).count, 1);
}

TEST(Matchings, BoundsSelection) {
  // 20 disjoint edges: Delta = 1, E = 20 >= 4*1*2^2.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 20; ++i) e.emplace_back(2 * i, 2 * i + 1);
  CountReport r = count_t_matchings(Graph(40, e), 2);
  EXPECT_EQ(r.count, 190);
  EXPECT_TRUE(r.hypotheses_met);
  EXPECT_EQ(r.bound_value, Rational(400, 4));
  MatchingBounds b = matching_bounds(10, 1, 2);
  EXPECT_TRUE(b.weak_met);
  EXPECT_FALSE(b.strong_met);
  EXPECT_EQ(b.weak, Rational(100, 8));
  EXPECT_EQ(count_t_matchings(Graph(20, std::vector<Edge>(e.begin(), e.begin() + 10)), 2)
                .bound_value,
            Rational(100, 8));
}

TEST(Cherries, Examples) {
  CherryCounts c = count_cherries_and_c4(c4_sided());
  EXPECT_EQ(c.w_a, 2);
  EXPECT_EQ(c.w_b, 2);
  EXPECT_EQ(c.c4, 1);
  CherryCounts k = count_cherries_and_c4(complete_bipartite(2, 3));
  EXPECT_EQ(k.w_a, 6);
  EXPECT_EQ(k.w_b, 3);
  EXPECT_EQ(k.c4, 3);
  EXPECT_THROW(count_cherries_and_c4(c4()), Error);

  Graph g = bipartite_gnp(6, 6, 0.5, 3);
  CherryCounts r = count_cherries_and_c4(g);
  EXPECT_EQ(r.w_a, oracle::cherries(g, true));
  EXPECT_EQ(r.w_b, oracle::cherries(g, false));
  EXPECT_EQ(r.c4, oracle::c4_bipartite(g));
}

TEST(Cherries, ReportsCarryBounds) {
  auto rows = cherry_reports(complete_bipartite(4, 4));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].structure, Structure::cherry_A);
  EXPECT_EQ(rows[2].count, 36);
  // E = 16, n = 8: 256 < 512 so the hypothesis fails.
  EXPECT_FALSE(rows[2].hypotheses_met);
  EXPECT_EQ(rows[2].bound_value, Rational(65536, 32 * 256));
  EXPECT_EQ(to_csv_row(rows[2]), "c4,2,8,16,36,8,1,false");
}

TEST(LinkGraph, Examples) {
  LinkGraph lg = link_graph(c4_sided(), Edge(0, 1));
  EXPECT_EQ(lg.x_side, (std::vector<Vertex>{2}));
  EXPECT_EQ(lg.y_side, (std::vector<Vertex>{3}));
  EXPECT_EQ(lg.e_m(), 1u);
  EXPECT_EQ(lg.v_m(), 2u);
  EXPECT_THROW(link_graph(c4_sided(), Edge(0, 2)), Error);
}

TEST(LinkGraph, CubeContainsOppositeMatching) {
  Graph q = h_st(2, 2);
  // M = {x_1 y_1, x_2 y_2}; opposite part {x'_1 y'_1, x'_2 y'_2}.
  TMatching m({Edge(0, 6), Edge(1, 7)});
  LinkGraph lg = link_graph(q, m);
  const auto& ids = lg.graph.original_id;
  auto has = [&](Vertex a, Vertex b) {
    auto ia = std::find(ids.begin(), ids.end(), a) - ids.begin();
    auto ib = std::find(ids.begin(), ids.end(), b) - ids.begin();
    if (ia == static_cast<long>(ids.size()) || ib == static_cast<long>(ids.size())) return false;
    return lg.graph.graph.adjacent(static_cast<Vertex>(ia), static_cast<Vertex>(ib));
  };
  EXPECT_TRUE(has(4, 2));
  EXPECT_TRUE(has(5, 3));
}

TEST(LinkGraph, SidesMatchNaiveIntersection) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = bipartite_gnp(5, 5, 0.6, seed);
    for (const Edge& e : g.edges()) {
      LinkGraph lg = link_graph(g, e);
      std::vector<Vertex> x, y;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (v == e.u || v == e.v) continue;
        if (g.in_side_a(v) && g.adjacent(v, g.in_side_a(e.u) ? e.v : e.u)) x.push_back(v);
        if (!g.in_side_a(v) && g.adjacent(v, g.in_side_a(e.u) ? e.u : e.v)) y.push_back(v);
      }
      EXPECT_EQ(lg.x_side, x);
      EXPECT_EQ(lg.y_side, y);
      for (Vertex v : lg.x_side) EXPECT_TRUE(g.in_side_a(v));
      for (Vertex v : lg.y_side) EXPECT_FALSE(g.in_side_a(v));
    }
  }
}

TEST(H1t, Examples) {
  H1tCounts c = count_h1t(c4_sided(), 1);
  EXPECT_EQ(c.incidences, 4);
  EXPECT_EQ(c.copies, 1);
  Graph p = path(4).with_bipartition({1, 0, 1, 0});
  H1tCounts z = count_h1t(p, 1);
  EXPECT_EQ(z.incidences, 0);
  EXPECT_EQ(z.copies, 0);
  EXPECT_EQ(oracle::copies(oracle::hst(1, 1), p), 0u);

  Graph q = h_st(2, 2);
  H1tCounts qc = count_h1t(q, 2);
  EXPECT_EQ(qc.copies, oracle::copies(oracle::hst(1, 2), q));
  EXPECT_EQ(qc.incidences, oracle::h1t_incidences(q, 2));
  EXPECT_THROW(count_h1t(c4(), 1), Error);
}

TEST(Spiders, Examples) {
  EXPECT_EQ(count_spiders(path(3), 1), 1);
  EXPECT_EQ(count_spiders(complete_graph(3), 1), 3);
  EXPECT_EQ(count_spiders(c4(), 1), 4);
  EXPECT_EQ(count_spiders(path(5), 2), 1);
}

TEST(Hst, Examples) {
  EXPECT_GE(count_hst(h_st(2, 2), 2, 2), 1);
  EXPECT_EQ(count_hst(h_st(2, 2), 2, 2), oracle::copies(oracle::hst(2, 2), h_st(2, 2)));
  EXPECT_EQ(count_hst(c4(), 1, 1), 1);
  EXPECT_EQ(count_hst(complete_bipartite(3, 3), 1, 1), 9);
  EXPECT_EQ(count_hst(h_st(1, 2), 1, 2), 1);
  EXPECT_EQ(count_hst(h_st(2, 3), 2, 3), 1);
}

TEST(Hst, CapsAreErrors) {
  CountCaps caps;
  try {
    count_hst(Graph(30), 2, 2, caps);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
  caps.hst_max_steps = 100;
  EXPECT_THROW(count_hst(complete_graph(10), 2, 2, caps), Error);
}

TEST(Biclique, FreeExamples) {
  EXPECT_FALSE(is_biclique_free(c4(), 2, 2));
  EXPECT_TRUE(is_biclique_free(cycle_graph(6), 2, 2));
  EXPECT_FALSE(is_biclique_free(complete_bipartite(2, 3), 3, 2));
  auto found = find_biclique(complete_bipartite(3, 15), 3, 15);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->first, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(found->second.size(), 15u);
}

TEST(Biclique, FreeMatchesOracle) {
  for (const Graph& g : sample(60, 8)) {
    for (std::size_t p = 1; p <= 3; ++p) {
      for (std::size_t q = 1; q <= 3; ++q) {
        // K_{p,q} with ordered sides: count embeddings of the complete
        // bipartite pattern; any embedding puts a p-set fully joined to a q-set.
        Graph pattern = complete_bipartite(p, q).without_bipartition();
        EXPECT_EQ(is_biclique_free(g, p, q), oracle::embeddings(pattern, g) == 0);
        auto w = find_biclique(g, p, q);
        if (w) {
          for (Vertex a : w->first)
            for (Vertex b : w->second) EXPECT_TRUE(g.adjacent(a, b));
        }
      }
    }
  }
}

TEST(OracleEquivalence, GeneralCounters) {
  for (const Graph& g : sample(200, 10)) {
    for (std::size_t t = 1; t <= 3; ++t) {
      EXPECT_EQ(count_stars(g, t), oracle::stars(g, t));
      EXPECT_EQ(count_t_matchings(g, t).count, oracle::copies(oracle::matching(t), g));
    }
    for (std::size_t t = 2; t <= 3; ++t) {
      EXPECT_EQ(count_bicliques(g, t).count, oracle::copies(oracle::biclique(t), g));
    }
    for (std::size_t t = 1; t <= 2; ++t) {
      EXPECT_EQ(count_spiders(g, t), oracle::copies(oracle::spider(t), g));
    }
    const std::uint64_t c4s = oracle::copies(oracle::hst(1, 1), g);
    EXPECT_EQ(count_hst(g, 1, 1), c4s);
  }
}

TEST(OracleEquivalence, Hst22) {
  for (const Graph& g : sample(60, 10)) {
    EXPECT_EQ(count_hst(g, 2, 2), oracle::copies(oracle::hst(2, 2), g));
  }
}

TEST(OracleEquivalence, BipartiteCounters) {
  for (const Graph& g : bipartite_sample(120)) {
    CherryCounts c = count_cherries_and_c4(g);
    EXPECT_EQ(c.w_a, oracle::cherries(g, true));
    EXPECT_EQ(c.w_b, oracle::cherries(g, false));
    EXPECT_EQ(c.c4, oracle::c4_bipartite(g));
    for (std::size_t t = 1; t <= 2; ++t) {
      H1tCounts h = count_h1t(g, t);
      EXPECT_EQ(h.incidences, oracle::h1t_incidences(g, t));
      EXPECT_EQ(h.copies, oracle::copies(oracle::hst(1, t), g));
      EXPECT_EQ(count_htt_incidences(g, t), oracle::htt_incidences(g, t));
    }
    // An ordered (M, N) pair fixes an H_{2,2} labeling up to 8 automorphisms.
    EXPECT_EQ(count_htt_incidences(g, 2) * 8, oracle::embeddings(oracle::hst(2, 2), g));
  }
}

TEST(Inequalities, BicliqueBoundOnFilteredGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gnp(9 + seed % 4, 0.7 + 0.05 * (seed % 6), seed);
    CountReport r = count_bicliques(g, 2);
    if (r.hypotheses_met) {
      EXPECT_TRUE(r.bound_holds()) << "seed " << seed;
    }
  }
}

TEST(Inequalities, CherryBoundsWhenDense) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = bipartite_gnp(10, 10, 0.95, seed);
    CherryBoundCheck k = check_cherry_bounds(g, count_cherries_and_c4(g));
    if (!k.hypothesis) continue;
    ++checked;
    EXPECT_TRUE(k.all()) << "seed " << seed;
  }
  EXPECT_GT(checked, 0);
}

TEST(Inequalities, H1tAndHttFilters) {
  // Both hypotheses are far out of reach at this size; the filter must report
  // that rather than pass vacuously on a misread flag.
  Graph k = complete_bipartite(6, 6);
  EXPECT_FALSE(h1t_hypothesis(k, 1));
  EXPECT_FALSE(htt_hypothesis(k, 1, 6));
  EXPECT_LE(h1t_bound(k, 1), Rational(count_h1t(k, 1).incidences));
  EXPECT_LE(htt_bound(k, 1), Rational(count_htt_incidences(k, 1)));
  EXPECT_EQ(htt_constant(1), Rational(1, 1024));
}

TEST(Exponent, Examples) {
  std::vector<Graph> c{c4()};
  FamilyExponent e = erdos_renyi_exponent(c);
  EXPECT_EQ(e.gamma, Rational(2, 3));
  EXPECT_EQ(e.c_exponent, Rational(1));
  EXPECT_EQ(e.witness_subgraph.m(), 4u);
  EXPECT_EQ(e.lower_bound_exponent(), Rational(4, 3));

  std::vector<Graph> k{complete_graph(3)};
  EXPECT_EQ(erdos_renyi_exponent(k).gamma, Rational(1, 2));

  std::vector<Graph> f = materialize_density_family(Rational(4), 5);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], complete_graph(5));
  EXPECT_EQ(erdos_renyi_exponent(f).gamma, density_family_gamma(Rational(4), 5));
  EXPECT_EQ(density_family_gamma(Rational(4), 5), Rational(1, 3));
}

TEST(Exponent, GammaAtMostCExponent) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gnp(4 + seed % 6, 0.6, seed);
    if (g.m() < 2) continue;
    std::vector<Graph> fam{g};
    FamilyExponent e = erdos_renyi_exponent(fam);
    EXPECT_LE(e.gamma, e.c_exponent);
    EXPECT_GT(e.c_exponent, 0);
  }
}

TEST(Exponent, Errors) {
  std::vector<Graph> big{complete_graph(11)};
  EXPECT_THROW(erdos_renyi_exponent(big), Error);
  std::vector<Graph> thin{Graph(3, {Edge(0, 1)})};
  EXPECT_THROW(erdos_renyi_exponent(thin), Error);
}

TEST(Exponent, SmallDensityFamilies) {
  // d = 2 on 3 vertices: only the triangle.
  EXPECT_EQ(materialize_density_family(Rational(2), 3).size(), 1u);
  // d = 3 on at most 4 vertices: only K4.
  auto f = materialize_density_family(Rational(3), 4);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], complete_graph(4));
}

TEST(BinomialFloor, Examples) {
  EXPECT_TRUE(binomial_floor_check(4, 2));
  EXPECT_TRUE(binomial_floor_check(9, 3));
  for (std::uint64_t m = 1; m <= 8; ++m) EXPECT_TRUE(binomial_floor_check(m * m, m));
  for (std::uint64_t m = 1; m <= 6; ++m)
    for (std::uint64_t x = m * m; x < m * m + 40; ++x) EXPECT_TRUE(binomial_floor_check(x, m));
  EXPECT_THROW(binomial_floor_check(3, 2), Error);
  EXPECT_THROW(binomial_floor_check(0, 0), Error);
}

TEST(CountReport, CsvAndStructureNames) {
  CountReport r = count_bicliques(complete_graph(25), 2);
  EXPECT_EQ(to_csv_row(r), "biclique_tt,2,25,300,37950,2592,1,true");
  EXPECT_EQ(parse_structure("spider_t"), Structure::spider_t);
  EXPECT_THROW(parse_structure("k5"), Error);
}
