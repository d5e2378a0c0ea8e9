#pragma once

#include "dn/goodness.hpp"
#include "dn/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dn {

/// t-uniform hypergraph ("t-graph") with sorted, distinct edges.
struct Hypergraph {
  std::size_t n = 0;
  std::size_t t = 0;
  std::vector<std::vector<Vertex>> edges;

  /// Throws if an edge has the wrong size, repeats, or leaves 0..n-1.
  void validate() const;
  /// Largest number of edges through one vertex.
  std::size_t max_degree() const;
};

/// Maximal matching built greedily in lexicographic edge order. Returns edge
/// indices. Size is at least ceil(e / (t D)).
std::vector<std::size_t> greedy_hypergraph_matching(const Hypergraph& h);

struct SpanningSelection {
  std::vector<std::size_t> chosen;  // indices into the input
  std::vector<Vertex> covered;      // union of the chosen edges
  bool hypothesis_met = false;      // at least C(m,t) distinct edges supplied
  bool reached = false;             // |covered| >= m
};

/// Scans `edges` in order, adding each edge not already inside the union,
/// until the union reaches m vertices. With at least C(m,t) distinct t-sets
/// this stops after at most m-t+1 edges.
SpanningSelection spanning_selection(std::span<const std::vector<Vertex>> edges, std::size_t m);

/// Two-phase greedy: a maximal edge-disjoint subfamily, then a maximal
/// vertex-disjoint subfamily of that. Members are edge lists; returns indices.
std::vector<std::size_t> two_phase_disjoint(std::span<const std::vector<Edge>> matchings);

/// Vertex coloring with classes L_1..L_h.
struct Partition {
  std::size_t h = 0;
  std::vector<std::uint32_t> color_of;  // values 1..h
  std::uint64_t seed = 0;
  std::size_t attempts_used = 0;

  std::size_t n() const { return color_of.size(); }
  std::vector<Vertex> class_members(std::uint32_t j) const;
  /// Swaps the labels j and k.
  void swap_colors(std::uint32_t j, std::uint32_t k);
};

Partition random_partition(std::size_t n, std::size_t h, std::uint64_t seed);

/// "h n" then n lines "vertex color"; '#' lines are comments.
void write_partition(std::ostream& out, const Partition& p);
Partition load_partition(std::istream& in);

enum class SplitMode { even, odd };

const char* to_string(SplitMode m);
SplitMode parse_split_mode(const std::string& s);

struct FamilyRecord {
  std::size_t structure = 0;  // aux vertex index
  std::size_t level = 0;      // structure is (h, level)-good
  std::uint32_t cls = 0;      // class j
  std::vector<std::size_t> family;  // disjoint (h, level-1)-good aux vertices in L_j
};

struct SplitValidation {
  SplitMode mode = SplitMode::even;
  std::size_t h = 0;
  std::size_t theta = 0;
  std::vector<FamilyRecord> records;  // sorted by (structure, level, cls)
  std::optional<std::size_t> monochromatic_top;
  std::size_t short_records = 0;  // records with family size below theta
  bool passes = false;

  const FamilyRecord* find(std::size_t structure, std::size_t level, std::uint32_t cls) const;
};

/// Builds every family for the given partition. `aux` must be the biclique
/// aux (even) or htt aux (odd) of `g`, and `table` its goodness at level
/// h = p.h. A top structure is usable when it is (h,h)-good, monochromatic,
/// and has at least one aux neighbor.
SplitValidation validate_split(const Graph& g, const AuxGraph& aux, const GoodnessTable& table,
                               const Partition& p, std::size_t theta, SplitMode mode);

/// Convenience form that builds the aux graph and goodness table itself.
SplitValidation validate_split(const Graph& g, const Partition& p, std::size_t t,
                               std::size_t theta, SplitMode mode, const AuxCaps& caps = {});

/// Self-check of a validation against its definition: every family is
/// pairwise vertex-disjoint, inside its class, inside N*(S) or G_M, and made
/// of (h, level-1)-good members. Returns a description of the first breach.
std::optional<std::string> recheck_split(const Graph& g, const AuxGraph& aux,
                                         const GoodnessTable& table, const Partition& p,
                                         const SplitValidation& v);

inline constexpr const char* kSplitCsvHeader = "level,class,structure_id,family_size,theta,pass";
void write_split_csv(std::ostream& out, const SplitValidation& v, const AuxGraph& aux);

struct SplitAttempt {
  std::uint64_t seed = 0;
  std::size_t short_records = 0;
  bool has_top = false;
  bool passes = false;
};

struct SplitOutcome {
  bool success = false;
  std::optional<Partition> partition;         // passing or best attempt
  std::optional<SplitValidation> validation;  // for `partition`
  std::vector<SplitAttempt> attempts;
};

/// Attempt k colors with derive_seed(seed, k). Stops at the first pass; on
/// exhaustion returns the attempt with a top and the fewest short records.
SplitOutcome split_with_retries(const Graph& g, const AuxGraph& aux, const GoodnessTable& table,
                                std::size_t h, std::size_t theta, SplitMode mode,
                                std::size_t max_attempts, std::uint64_t seed);

/// Smallest integer c with c^{t^2} / 3^h > (4 b t^2 h^t)^t.
BigInt coloring_constant_even(std::size_t h, std::size_t t, std::uint64_t b);
/// Smallest integer c with (c'_t / 3^h) c^{t(2t+1)} >= (q t^3 2^{t+3} b h^{2t})^t.
BigInt coloring_constant_odd(std::size_t h, std::size_t t, std::uint64_t b, std::uint64_t q);

/// ceil(b n^{t/r}) (even) or ceil(b n^{(2t+1)/r}) (odd), exactly.
BigInt family_theta(SplitMode mode, std::size_t n, std::size_t t, std::size_t r, std::uint64_t b);

/// Smallest c >= 0 with c^k >= x.
BigInt integer_root_ceil(const BigInt& x, std::size_t k);

}  // namespace dn
