#pragma once

#include "dn/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dn {

enum class Structure {
  star_t,
  biclique_tt,
  t_matching,
  cherry_A,
  cherry_B,
  c4,
  h_1t,
  spider_t,
  h_st,
};

const char* to_string(Structure s);
Structure parse_structure(const std::string& name);

/// Exact count plus the matching supersaturation lower bound evaluated on the
/// same input. `hypotheses_met` says whether the bound is guaranteed to apply.
struct CountReport {
  Structure structure = Structure::star_t;
  std::size_t t = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  BigInt count = 0;
  Rational bound_value = 0;
  bool hypotheses_met = false;

  bool bound_holds() const { return Rational(count) >= bound_value; }
};

inline constexpr const char* kCountCsvHeader =
    "structure,t,n,m,count,bound_num,bound_den,hypotheses_met";
std::string to_csv_row(const CountReport& r);

struct CountCaps {
  /// Upper limit on C(n, t) for t-set enumerations.
  std::uint64_t max_tsets = 1'000'000;
  /// Host size limit for H_{s,t} counting.
  std::size_t hst_max_vertices = 24;
  /// Inner-loop budget for H_{s,t} counting.
  std::uint64_t hst_max_steps = 2'000'000'000;
};

// ---- t-matching enumeration over a vertex-masked host ----

/// Edges of g with both endpoints in `mask`, in edge-id order.
std::vector<Edge> edges_within(const Graph& g, const VertexSet& mask);

/// Number of t-subsets of `edges` that are pairwise vertex-disjoint.
BigInt count_matchings(std::span<const Edge> edges, std::size_t n, std::size_t t);

/// Visits every t-matching of `edges` (indices into `edges`, ascending).
/// Return false from `f` to stop.
void for_each_matching(std::span<const Edge> edges, std::size_t n, std::size_t t,
                       const std::function<bool(std::span<const std::uint32_t>)>& f);

// ---- counters ----

BigInt count_stars(const Graph& g, std::size_t t);

/// c_t = 2^{t^2-t-3} / (t!)^2.
Rational biclique_constant(std::size_t t);
/// Unordered pairs {S, T} of disjoint t-sets with all t^2 cross edges.
/// Bound c_t E^{t^2} / n^{2t^2-2t}; hypotheses E >= t n^{2-1/t} and n >= t^2.
CountReport count_bicliques(const Graph& g, std::size_t t, const CountCaps& caps = {});

struct MatchingBounds {
  bool weak_met = false;  // E >= 4 Delta t
  Rational weak;          // E^t / (2^t t!)
  bool strong_met = false;  // E >= 4 Delta t^2
  Rational strong;          // E^t / (2 t!)
};
MatchingBounds matching_bounds(std::size_t edges, std::size_t max_degree, std::size_t t);

/// Unordered sets of t pairwise disjoint edges. The report carries the
/// strongest bound whose hypothesis holds.
CountReport count_t_matchings(const Graph& g, std::size_t t);

struct CherryCounts {
  BigInt w_a = 0;  // K_{1,2}'s centered in A
  BigInt w_b = 0;  // K_{1,2}'s centered in B
  BigInt c4 = 0;
};
CherryCounts count_cherries_and_c4(const Graph& g);

struct CherryBoundCheck {
  bool hypothesis = false;  // E >= n^{3/2}
  bool w_a = false;         // W_A >= E^2 / (4|A|)
  bool w_b = false;         // W_B >= E^2 / (4|B|)
  bool c4_from_w_a = false;  // S >= W_A^2 / (2|B|^2)
  bool c4_from_w_b = false;  // S >= W_B^2 / (2|A|^2)
  bool c4_from_e = false;    // S >= E^4 / (32 |A|^2 |B|^2)

  bool all() const { return w_a && w_b && c4_from_w_a && c4_from_w_b && c4_from_e; }
};
CherryBoundCheck check_cherry_bounds(const Graph& g, const CherryCounts& counts);
std::vector<CountReport> cherry_reports(const Graph& g);

/// Link graph of a matching M in a bipartite host:
/// X = N*(V(M) ∩ B) \ V(M), Y = N*(V(M) ∩ A) \ V(M), G_M = G[X ∪ Y].
struct LinkGraph {
  TMatching anchor;
  std::vector<Vertex> x_side;
  std::vector<Vertex> y_side;
  InducedSubgraph graph;

  std::size_t v_m() const { return x_side.size() + y_side.size(); }
  std::size_t e_m() const { return graph.graph.m(); }
};
LinkGraph link_graph(const Graph& g, const TMatching& anchor);
LinkGraph link_graph(const Graph& g, Edge anchor);

/// X ∪ Y of the link graph as a mask, without materializing G_M.
VertexSet link_mask(const Graph& g, std::span<const Edge> anchor);

struct H1tCounts {
  BigInt copies = 0;      // distinct H_{1,t} subgraphs
  BigInt incidences = 0;  // sum over edges e of #t-matchings in G_e
};
H1tCounts count_h1t(const Graph& g, std::size_t t);
/// 1 / (2^{5t+2} t!) * E^{3t+1} / (|A|^{2t} |B|^{2t}).
Rational h1t_bound(const Graph& g, std::size_t t);
/// E >= 4 sqrt(2t) n^{3/2}.
bool h1t_hypothesis(const Graph& g, std::size_t t);

/// Sum over t-matchings M of the number of t-matchings in G_M (ordered
/// incidence pairs; each H_{t,t} aux edge is counted twice).
BigInt count_htt_incidences(const Graph& g, std::size_t t);
/// c'_t = 1 / (2^{5t^2+4t+1} (t!)^{t+1}).
Rational htt_constant(std::size_t t);
/// c'_t E^{2t^2+2t} / n^{4t^2}.
Rational htt_bound(const Graph& g, std::size_t t);
/// E >= 12 q t n^{4t/(2t+1)}.
bool htt_hypothesis(const Graph& g, std::size_t t, std::size_t q);

/// t-spider copies: a center joined to t paths of length 2.
BigInt count_spiders(const Graph& g, std::size_t t);

/// Number of H_{s,t} subgraph copies.
BigInt count_hst(const Graph& g, std::size_t s, std::size_t t, const CountCaps& caps = {});

/// A K_{p,q} with a p-set side and a q-set side, if one exists. The p-set is
/// the lexicographically first with |N*| >= q; the q side takes the lowest ids.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> find_biclique(
    const Graph& g, std::size_t p, std::size_t q);
bool is_biclique_free(const Graph& g, std::size_t p, std::size_t q);

// ---- Erdős–Rényi exponent ----

struct FamilyExponent {
  Rational gamma;       // max_j min_{H ⊆ F_j, e(H) >= 2} (n(H)-2)/(e(H)-1)
  Rational c_exponent;  // max_j min_{H ⊆ F_j, e(H) >= 1} n(H)/e(H)
  std::size_t witness_member = 0;
  std::vector<Vertex> witness_vertices;  // vertex set of the minimizing H
  Graph witness_subgraph;

  Rational lower_bound_exponent() const { return Rational(2) - gamma; }
};

/// Brute force over vertex subsets of each member (at most 10 vertices, at
/// least 2 edges).
FamilyExponent erdos_renyi_exponent(std::span<const Graph> family);

/// All graphs (up to isomorphism) on at most m vertices with average degree
/// at least d, without isolated vertices. m <= 6.
std::vector<Graph> materialize_density_family(const Rational& d, std::size_t m);

/// (m-2) / (dm/2 - 1).
Rational density_family_gamma(const Rational& d, std::size_t m);

/// C(x, m) * 2 * m! >= x^m, exact. Requires x >= m^2 >= 1.
bool binomial_floor_check(std::uint64_t x, std::uint64_t m);

}  // namespace dn
