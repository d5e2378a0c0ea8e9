#pragma once

#include "dn/types.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dn {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Undirected simple graph on vertices 0..n-1, optionally carrying a
/// bipartition. Immutable after construction.
///
/// Adjacency is held both as sorted neighbor lists and, for graphs with at
/// most kRowLimit vertices, as one bit row per vertex so that common
/// neighborhoods reduce to word-wise ANDs.
class Graph {
 public:
  static constexpr std::size_t kRowLimit = 4096;

  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws Error on self-loops, duplicate edges, out-of-range endpoints, or
  /// a bipartition that some edge violates. `side_a[v] != 0` puts v in A.
  Graph(std::size_t n, std::vector<Edge> edges,
        std::optional<std::vector<std::uint8_t>> side_a = std::nullopt);

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Sorted edge list; positions are stable edge ids.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Edge e) const;

  bool has_rows() const { return !rows_.empty() || n() == 0; }
  /// Neighbor bit row. Requires has_rows().
  const VertexSet& row(Vertex v) const { return rows_[v]; }
  /// Neighbor set as a bit row, built on demand for large graphs.
  VertexSet neighbor_set(Vertex v) const;

  bool has_bipartition() const { return bipartite_; }
  bool in_side_a(Vertex v) const { return side_[v] != 0; }
  const std::vector<std::uint8_t>& sides() const { return side_; }
  std::vector<Vertex> side_a() const;
  std::vector<Vertex> side_b() const;
  /// True when the bipartition is exactly A = {0, ..., a-1}.
  std::optional<std::size_t> prefix_side_size() const;

  /// Copy of this graph with a bipartition attached (validated).
  Graph with_bipartition(std::vector<std::uint8_t> side_a) const;
  Graph without_bipartition() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edges_ == b.edges_ &&
           a.bipartite_ == b.bipartite_ && a.side_ == b.side_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> rows_;
  std::vector<std::uint8_t> side_;
  bool bipartite_ = false;
};

/// A nonempty set of distinct vertices kept sorted ascending.
class TSet {
 public:
  TSet() = default;
  explicit TSet(std::vector<Vertex> members);

  std::size_t size() const { return members_.size(); }
  std::span<const Vertex> members() const { return members_; }
  bool contains(Vertex v) const;

  friend auto operator<=>(const TSet&, const TSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// An unordered set of pairwise vertex-disjoint edges, kept sorted.
class TMatching {
 public:
  TMatching() = default;
  explicit TMatching(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  /// All 2t endpoints, sorted.
  std::vector<Vertex> vertices() const;
  /// Endpoints on side A (resp. B) of a bipartite host.
  std::vector<Vertex> a_vertices(const Graph& host) const;
  std::vector<Vertex> b_vertices(const Graph& host) const;

  friend auto operator<=>(const TMatching&, const TMatching&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Validates a matching against a host: every edge present.
void check_matching_in(const Graph& g, const TMatching& m);

/// Graph radius with an explicit infinity for disconnected graphs.
class Radius {
 public:
  static Radius infinite() { return Radius(); }
  static Radius finite(std::size_t value) { return Radius(value); }

  bool is_finite() const { return finite_; }
  std::size_t value() const;

  bool at_most(std::size_t bound) const { return finite_ && value_ <= bound; }

  friend bool operator==(const Radius&, const Radius&) = default;

 private:
  Radius() = default;
  explicit Radius(std::size_t v) : value_(v), finite_(true) {}

  std::size_t value_ = 0;
  bool finite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Radius& r);

struct DegreeStats {
  std::size_t min_degree = 0;
  Rational avg_degree;
  Radius radius = Radius::infinite();
};

/// {v : v adjacent to every member of s}.
std::vector<Vertex> common_neighborhood(const Graph& g, std::span<const Vertex> s);
std::vector<Vertex> common_neighborhood(const Graph& g, const TSet& s);
/// Bit-row form of common_neighborhood; empty input gives all of V.
VertexSet common_neighbor_mask(const Graph& g, std::span<const Vertex> s);

/// BFS distances from `source`; unreachable vertices hold SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
Radius radius(const Graph& g);
Rational average_degree(const Graph& g);
DegreeStats degree_stats(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_id[k] is the host vertex that became vertex k.
  std::vector<Vertex> original_id;
};

/// Subgraph induced on `w` (deduplicated, re-indexed in ascending host order).
/// Inherits the host bipartition restricted to `w` when present.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> w);

/// Proper 2-coloring if one exists (side value 1 = A); lowest vertex of each
/// component goes to A.
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);

/// Spanning bipartite subgraph keeping at least ceil(m/2) edges, with its
/// bipartition attached. Bipartite inputs are returned unchanged (their
/// declared or computed bipartition attached); otherwise a seeded random
/// bisection is improved by single-vertex moves until no vertex has more
/// neighbors on its own side than across.
Graph bipartite_half(const Graph& g, std::uint64_t seed);

}  // namespace dn
