#include "dn/generators.hpp"

#include "dn/rng.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace dn {
namespace {

double require(const GeneratorParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorKind::invalid_argument, "missing generator parameter '" + key + "'");
  }
  return it->second;
}

std::size_t require_count(const GeneratorParams& params, const std::string& key) {
  double v = require(params, key);
  if (v < 0 || v != std::floor(v)) {
    throw Error(ErrorKind::invalid_argument, "parameter '" + key + "' must be a natural number");
  }
  return static_cast<std::size_t>(v);
}

double require_probability(const GeneratorParams& params, const std::string& key) {
  double p = require(params, key);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "parameter '" + key + "' must lie in [0, 1]");
  }
  return p;
}

}  // namespace

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "gnp") return GeneratorKind::gnp;
  if (name == "gnm") return GeneratorKind::gnm;
  if (name == "complete") return GeneratorKind::complete;
  if (name == "complete_bipartite") return GeneratorKind::complete_bipartite;
  if (name == "cycle") return GeneratorKind::cycle;
  if (name == "hypercube_q3") return GeneratorKind::hypercube_q3;
  if (name == "h_st") return GeneratorKind::h_st;
  if (name == "bipartite_gnp") return GeneratorKind::bipartite_gnp;
  throw Error(ErrorKind::invalid_argument, "unknown generator kind '" + name + "'");
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::gnp: return "gnp";
    case GeneratorKind::gnm: return "gnm";
    case GeneratorKind::complete: return "complete";
    case GeneratorKind::complete_bipartite: return "complete_bipartite";
    case GeneratorKind::cycle: return "cycle";
    case GeneratorKind::hypercube_q3: return "hypercube_q3";
    case GeneratorKind::h_st: return "h_st";
    case GeneratorKind::bipartite_gnp: return "bipartite_gnp";
  }
  return "unknown";
}

Graph generate(GeneratorKind kind, const GeneratorParams& params, std::uint64_t seed) {
  switch (kind) {
    case GeneratorKind::gnp:
      return gnp(require_count(params, "n"), require_probability(params, "p"), seed);
    case GeneratorKind::gnm:
      return gnm(require_count(params, "n"), require_count(params, "m"), seed);
    case GeneratorKind::complete:
      return complete_graph(require_count(params, "n"));
    case GeneratorKind::complete_bipartite:
      return complete_bipartite(require_count(params, "a"), require_count(params, "b"));
    case GeneratorKind::cycle:
      return cycle_graph(require_count(params, "n"));
    case GeneratorKind::hypercube_q3:
      return hypercube_q3();
    case GeneratorKind::h_st:
      return h_st(require_count(params, "s"), require_count(params, "t"));
    case GeneratorKind::bipartite_gnp:
      return bipartite_gnp(require_count(params, "a"), require_count(params, "b"),
                           require_probability(params, "p"), seed);
  }
  throw Error(ErrorKind::invalid_argument, "unknown generator kind");
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (m > total) {
    throw Error(ErrorKind::invalid_argument, "gnm: m exceeds n(n-1)/2");
  }
  std::vector<Edge> all;
  all.reserve(total);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  // Partial Fisher-Yates: the first m slots become a uniform m-subset.
  Rng rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = i + rng.below(total - i);
    std::swap(all[i], all[j]);
  }
  all.resize(m);
  return Graph(n, std::move(all));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  std::vector<std::uint8_t> sides(a + b, 0);
  std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(a), 1);
  return Graph(a + b, std::move(edges), std::move(sides));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph hypercube_q3() {
  // Corners as 3-bit words; even parity first.
  std::vector<unsigned> order;
  for (unsigned w = 0; w < 8; ++w)
    if (std::popcount(w) % 2 == 0) order.push_back(w);
  for (unsigned w = 0; w < 8; ++w)
    if (std::popcount(w) % 2 == 1) order.push_back(w);
  std::vector<Vertex> pos(8);
  for (Vertex k = 0; k < 8; ++k) pos[order[k]] = k;
  std::vector<Edge> edges;
  for (unsigned w = 0; w < 8; ++w)
    for (unsigned bit = 1; bit < 8; bit <<= 1)
      if (w < (w ^ bit)) edges.emplace_back(pos[w], pos[w ^ bit]);
  return Graph(8, std::move(edges), std::vector<std::uint8_t>{1, 1, 1, 1, 0, 0, 0, 0});
}

Graph h_st(std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw Error(ErrorKind::invalid_argument, "h_st needs s, t >= 1");
  // Side A: x_i = i, y'_j = s + j.  Side B: x'_j = s + t + j, y_i = s + 2t + i.
  auto x = [&](std::size_t i) { return static_cast<Vertex>(i); };
  auto yp = [&](std::size_t j) { return static_cast<Vertex>(s + j); };
  auto xp = [&](std::size_t j) { return static_cast<Vertex>(s + t + j); };
  auto y = [&](std::size_t i) { return static_cast<Vertex>(s + 2 * t + i); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      edges.emplace_back(x(i), xp(j));
      edges.emplace_back(y(i), yp(j));
    }
    edges.emplace_back(x(i), y(i));
  }
  for (std::size_t j = 0; j < t; ++j) edges.emplace_back(xp(j), yp(j));
  const std::size_t n = 2 * (s + t);
  std::vector<std::uint8_t> sides(n, 0);
  std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(s + t), 1);
  return Graph(n, std::move(edges), std::move(sides));
}

Graph bipartite_gnp(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, static_cast<Vertex>(a + v));
  std::vector<std::uint8_t> sides(a + b, 0);
  std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(a), 1);
  return Graph(a + b, std::move(edges), std::move(sides));
}

}  // namespace dn
