#pragma once

#include "dn/graph.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace dn {

enum class GeneratorKind {
  gnp,
  gnm,
  complete,
  complete_bipartite,
  cycle,
  hypercube_q3,
  h_st,
  bipartite_gnp,
};

GeneratorKind parse_generator_kind(const std::string& name);
const char* to_string(GeneratorKind kind);

/// Named numeric parameters, e.g. {"n", 10}, {"p", 0.5}.
using GeneratorParams = std::map<std::string, double>;

/// Deterministic for a fixed seed. Parameters per kind:
///   gnp: n, p          gnm: n, m            complete: n
///   complete_bipartite: a, b                cycle: n (>= 3)
///   hypercube_q3: none h_st: s, t           bipartite_gnp: a, b, p
Graph generate(GeneratorKind kind, const GeneratorParams& params, std::uint64_t seed);

Graph gnp(std::size_t n, double p, std::uint64_t seed);
Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed);
Graph complete_graph(std::size_t n);
/// Side A = 0..a-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
/// Q3 relabeled so the even-parity corners form side A = 0..3.
Graph hypercube_q3();
/// Two copies of K_{s,t} joined by an (s+t)-matching. Side A holds
/// x_1..x_s then y'_1..y'_t; side B holds x'_1..x'_t then y_1..y_s.
Graph h_st(std::size_t s, std::size_t t);
Graph bipartite_gnp(std::size_t a, std::size_t b, double p, std::uint64_t seed);

}  // namespace dn
