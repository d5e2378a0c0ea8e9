#pragma once

#include "dn/graph.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dn {

enum class AuxKind { biclique_aux, htt_aux };

const char* to_string(AuxKind k);

struct AuxCaps {
  std::uint64_t max_vertices = 1'000'000;
  std::uint64_t max_edges = 20'000'000;
};

/// Auxiliary graph whose vertices are the t-sets (biclique_aux) or the
/// t-matchings (htt_aux) of a host, in canonical lexicographic order.
/// Two vertices are adjacent when they form the two parts of a K_{t,t}
/// (resp. H_{t,t}) in the host.
class AuxGraph {
 public:
  AuxKind kind() const { return kind_; }
  std::size_t t() const { return t_; }
  std::size_t size() const { return items_.size(); }
  const Graph& graph() const { return graph_; }
  Rational avg_degree() const { return average_degree(graph_); }

  /// Members of a t-set, or the 2t endpoints of a t-matching (sorted).
  std::vector<Vertex> host_vertices(std::size_t idx) const;
  TSet tset(std::size_t idx) const;
  TMatching matching(std::size_t idx) const;
  /// Host edge ids of a t-matching, ascending.
  std::span<const std::uint32_t> edge_ids(std::size_t idx) const { return items_[idx]; }

  std::optional<std::size_t> find_tset(std::span<const Vertex> sorted_members) const;
  std::optional<std::size_t> find_matching(std::span<const std::uint32_t> sorted_edge_ids) const;

  /// "0+3" for a t-set; "0-12+3-15" for a t-matching.
  std::string encode(std::size_t idx) const;
  /// Inverse of encode; throws parse errors on malformed or unknown input.
  std::size_t decode(const std::string& text) const;

  friend AuxGraph build_aux(const Graph& g, std::size_t t, AuxKind kind, const AuxCaps& caps);

 private:
  AuxKind kind_ = AuxKind::biclique_aux;
  std::size_t t_ = 0;
  std::size_t host_n_ = 0;
  std::vector<Edge> host_edges_;  // htt_aux only
  std::vector<std::vector<std::uint32_t>> items_;
  Graph graph_;
};

/// Throws cap_exceeded when the vertex or edge count passes the caps, and
/// missing_bipartition for htt_aux on a host without sides.
AuxGraph build_aux(const Graph& g, std::size_t t, AuxKind kind, const AuxCaps& caps = {});

/// (h,i)-goodness per vertex for i = 1..h. Level 0 is all-good by convention.
struct GoodnessTable {
  std::size_t h = 0;
  Rational average_degree;    // D
  Rational degree_threshold;  // D / 3^h
  std::vector<std::vector<std::uint8_t>> levels;  // levels[i-1][v]
  std::vector<Rational> bad_degree_sums;          // s_1..s_h

  std::size_t size() const { return levels.empty() ? 0 : levels.front().size(); }
  bool good(std::size_t v, std::size_t i) const { return i == 0 || levels[i - 1][v] != 0; }
  std::vector<std::size_t> good_set(std::size_t i) const;
};

/// good(v,1) iff d(v) >= D/3^h; good(v,i) iff good(v,1) and at least half of
/// v's neighbors are good at level i-1 (ties count as good).
GoodnessTable classify_goodness(const Graph& g, std::size_t h);

/// CSV: vertex_index,structure_members,good_1..good_h. `label` renders the
/// structure of a vertex index (defaults to the index itself).
void write_goodness_csv(std::ostream& out, const GoodnessTable& table,
                        const std::function<std::string(std::size_t)>& label = {});

struct GoodStructures {
  AuxGraph aux;
  GoodnessTable table;
  std::vector<std::size_t> indices;  // aux vertices that are (h,i)-good
};
GoodStructures good_structures(const Graph& g, std::size_t t, std::size_t h, std::size_t i,
                               AuxKind kind, const AuxCaps& caps = {});

struct MassCheck {
  Rational edges;
  Rational bad_sum;   // sum of degrees over (h,h)-bad vertices
  Rational good_sum;  // sum of degrees over (h,h)-good vertices
  bool bad_ok = false;       // bad_sum <= 2e/3
  bool good_ok = false;      // good_sum >= 4e/3
  bool levels_ok = false;    // s_i <= 2e / 3^{h-i+1} for all i
  bool nesting_ok = false;   // A_1 ⊇ A_2 ⊇ ... ⊇ A_h

  bool passes() const { return bad_ok && good_ok; }
};
MassCheck goodness_mass_check(const Graph& g, std::size_t h);
MassCheck goodness_mass_check(const Graph& g, const GoodnessTable& table);

}  // namespace dn
