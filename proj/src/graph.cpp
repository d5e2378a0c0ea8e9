#include "dn/graph.hpp"

#include "dn/rng.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>
#include <sstream>

namespace dn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::out_of_range: return "out_of_range";
    case ErrorKind::duplicate_edge: return "duplicate_edge";
    case ErrorKind::self_loop: return "self_loop";
    case ErrorKind::missing_bipartition: return "missing_bipartition";
    case ErrorKind::cap_exceeded: return "cap_exceeded";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::no_qualifying_index: return "no_qualifying_index";
    case ErrorKind::insufficient_parents: return "insufficient_parents";
    case ErrorKind::no_qualifying_selection: return "no_qualifying_selection";
  }
  return "unknown";
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Graph::Graph(std::size_t n) : adj_(n) {
  if (n <= kRowLimit) rows_.assign(n, VertexSet(n));
}

Graph::Graph(std::size_t n, std::vector<Edge> edges,
             std::optional<std::vector<std::uint8_t>> side_a)
    : adj_(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorKind::self_loop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw Error(ErrorKind::out_of_range,
                  "edge endpoint " + std::to_string(e.v) + " out of range for n=" +
                      std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorKind::duplicate_edge, "duplicate edge " + std::to_string(dup->u) +
                                               " " + std::to_string(dup->v));
  }
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  if (n <= kRowLimit) {
    rows_.assign(n, VertexSet(n));
    for (const Edge& e : edges_) {
      rows_[e.u].set(e.v);
      rows_[e.v].set(e.u);
    }
  }
  if (side_a) {
    if (side_a->size() != n) {
      throw Error(ErrorKind::invalid_argument, "bipartition size does not match n");
    }
    for (auto& s : *side_a) s = s ? 1 : 0;
    for (const Edge& e : edges_) {
      if ((*side_a)[e.u] == (*side_a)[e.v]) {
        throw Error(ErrorKind::invalid_argument,
                    "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                        " lies inside one side of the bipartition");
      }
    }
    side_ = std::move(*side_a);
    bipartite_ = true;
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!rows_.empty()) return rows_[u].test(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet Graph::neighbor_set(Vertex v) const {
  if (!rows_.empty()) return rows_[v];
  VertexSet s(n());
  for (Vertex u : adj_[v]) s.set(u);
  return s;
}

std::vector<Vertex> Graph::side_a() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < side_.size(); ++v)
    if (side_[v]) out.push_back(v);
  return out;
}

std::vector<Vertex> Graph::side_b() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < side_.size(); ++v)
    if (!side_[v]) out.push_back(v);
  return out;
}

std::optional<std::size_t> Graph::prefix_side_size() const {
  if (!bipartite_) return std::nullopt;
  std::size_t a = 0;
  while (a < side_.size() && side_[a]) ++a;
  for (std::size_t v = a; v < side_.size(); ++v)
    if (side_[v]) return std::nullopt;
  return a;
}

Graph Graph::with_bipartition(std::vector<std::uint8_t> side_a) const {
  return Graph(n(), edges_, std::move(side_a));
}

Graph Graph::without_bipartition() const { return Graph(n(), edges_); }

void Graph::check_vertex(Vertex v) const {
  if (v >= n()) {
    throw Error(ErrorKind::out_of_range, "vertex " + std::to_string(v) +
                                             " out of range for n=" + std::to_string(n()));
  }
}

TSet::TSet(std::vector<Vertex> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorKind::invalid_argument, "empty t-set");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorKind::invalid_argument, "t-set with repeated vertex");
  }
}

bool TSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

TMatching::TMatching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw Error(ErrorKind::invalid_argument, "empty matching");
  std::sort(edges_.begin(), edges_.end());
  auto vs = vertices();
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    throw Error(ErrorKind::invalid_argument, "matching edges share a vertex");
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw Error(ErrorKind::self_loop, "matching contains a loop");
  }
}

std::vector<Vertex> TMatching::vertices() const {
  std::vector<Vertex> vs;
  vs.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<Vertex> TMatching::a_vertices(const Graph& host) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) out.push_back(host.in_side_a(e.u) ? e.u : e.v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> TMatching::b_vertices(const Graph& host) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) out.push_back(host.in_side_a(e.u) ? e.v : e.u);
  std::sort(out.begin(), out.end());
  return out;
}

void check_matching_in(const Graph& g, const TMatching& m) {
  for (const Edge& e : m.edges()) {
    g.check_vertex(e.v);
    if (!g.adjacent(e.u, e.v)) {
      throw Error(ErrorKind::precondition, "matching edge " + std::to_string(e.u) + " " +
                                               std::to_string(e.v) + " not in graph");
    }
  }
}

std::size_t Radius::value() const {
  if (!finite_) throw Error(ErrorKind::precondition, "radius is infinite");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Radius& r) {
  if (r.is_finite()) return os << r.value();
  return os << "inf";
}

VertexSet common_neighbor_mask(const Graph& g, std::span<const Vertex> s) {
  VertexSet acc(g.n());
  acc.set();
  for (Vertex v : s) {
    g.check_vertex(v);
    if (g.has_rows()) {
      acc &= g.row(v);
    } else {
      acc &= g.neighbor_set(v);
    }
  }
  return acc;
}

std::vector<Vertex> common_neighborhood(const Graph& g, std::span<const Vertex> s) {
  VertexSet mask = common_neighbor_mask(g, s);
  std::vector<Vertex> out;
  out.reserve(mask.count());
  for (auto v = mask.find_first(); v != VertexSet::npos; v = mask.find_next(v)) {
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> common_neighborhood(const Graph& g, const TSet& s) {
  return common_neighborhood(g, s.members());
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.n(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

Radius radius(const Graph& g) {
  if (g.n() == 0) return Radius::infinite();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.n(); ++v) {
    auto dist = bfs_distances(g, v);
    std::size_t ecc = *std::max_element(dist.begin(), dist.end());
    // Any unreachable vertex makes every eccentricity infinite.
    if (ecc == std::numeric_limits<std::size_t>::max()) return Radius::infinite();
    best = std::min(best, ecc);
  }
  return Radius::finite(best);
}

Rational average_degree(const Graph& g) {
  if (g.n() == 0) return Rational(0);
  return Rational(BigInt(2 * g.m()), BigInt(g.n()));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.n() == 0) return s;
  s.min_degree = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) s.min_degree = std::min(s.min_degree, g.degree(v));
  s.avg_degree = average_degree(g);
  s.radius = radius(g);
  return s;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> w) {
  std::vector<Vertex> ids(w.begin(), w.end());
  for (Vertex v : ids) g.check_vertex(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<Vertex> local(g.n(), std::numeric_limits<Vertex>::max());
  for (std::size_t k = 0; k < ids.size(); ++k) local[ids[k]] = static_cast<Vertex>(k);

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (Vertex u : g.neighbors(ids[k])) {
      if (u > ids[k] && local[u] != std::numeric_limits<Vertex>::max()) {
        edges.emplace_back(static_cast<Vertex>(k), local[u]);
      }
    }
  }
  std::optional<std::vector<std::uint8_t>> sides;
  if (g.has_bipartition()) {
    sides.emplace();
    for (Vertex v : ids) sides->push_back(g.in_side_a(v) ? 1 : 0);
  }
  return {Graph(ids.size(), std::move(edges), std::move(sides)), std::move(ids)};
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> color(g.n(), kUnset);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[s] != kUnset) continue;
    color[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex u : g.neighbors(v)) {
        if (color[u] == kUnset) {
          color[u] = static_cast<std::uint8_t>(1 - color[v]);
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Graph bipartite_half(const Graph& g, std::uint64_t seed) {
  if (g.has_bipartition()) return g;
  if (auto coloring = two_coloring(g)) return g.with_bipartition(std::move(*coloring));

  Rng rng(seed);
  std::vector<std::uint8_t> side(g.n());
  for (auto& s : side) s = static_cast<std::uint8_t>(rng.below(2));

  // Each move strictly increases the cut, so the sweep terminates.
  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      std::size_t same = 0;
      for (Vertex u : g.neighbors(v)) same += side[u] == side[v];
      std::size_t cross = g.degree(v) - same;
      if (cross < same) {
        side[v] ^= 1;
        moved = true;
      }
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) kept.push_back(e);
  return Graph(g.n(), std::move(kept), std::move(side));
}

}  // namespace dn
