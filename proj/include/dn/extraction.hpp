#pragma once

#include "dn/goodness.hpp"
#include "dn/graph.hpp"
#include "dn/splitting.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dn {

/// Out-tree grown over aux vertices, one layer per class.
struct BfsTree {
  std::size_t root = 0;
  std::vector<std::vector<std::size_t>> layers;  // D_0 = {root}, D_1, ...
  std::unordered_map<std::size_t, std::size_t> parent;
  std::unordered_map<std::size_t, std::size_t> depth;

  bool contains(std::size_t x) const { return depth.count(x) != 0; }
  /// root, ..., x. Throws if x is not in the tree.
  std::vector<std::size_t> path_to(std::size_t x) const;
};

/// Deepest tree vertex on every root-to-leaf path.
std::size_t closest_common_ancestor(const BfsTree& tree, std::span<const std::size_t> leaves);

/// Picks the leaves of a collision. `parents` lists the host vertices of each
/// in-neighbor of the collision vertex (t-sets in even mode, t-matching
/// vertex sets in odd mode). Even: t+1 parents whose union has at least 2t
/// vertices. Odd: 2t+1 parents whose side-A (else side-B) parts cover at
/// least 3t vertices. Returns indices into `parents`.
/// Throws insufficient_parents or no_qualifying_selection.
std::vector<std::size_t> select_collision_leaves(const Graph& g,
                                                 std::span<const std::vector<Vertex>> parents,
                                                 std::size_t t, SplitMode mode);

/// C(2t,t) in even mode, t! * ceil((3e)^{2t}) in odd mode (saturating).
std::uint64_t default_collision_threshold(SplitMode mode, std::size_t t);

struct WitnessArc {
  std::string parent;  // structure encodings
  std::string child;
};

struct Certificate {
  SplitMode mode = SplitMode::even;
  std::size_t t = 0;
  std::size_t r = 0;
  std::vector<Vertex> vertices;  // V(G*), sorted
  std::vector<WitnessArc> arcs;  // T' plus the collision arcs; empty for a short-circuit
  // Values measured at extraction time. certify() ignores them.
  std::size_t min_degree = 0;
  Rational avg_degree;
  Radius radius = Radius::infinite();
  std::size_t order = 0;
};

/// Host vertices named by a structure encoding ("0+3" or "0-12+3-15").
std::vector<Vertex> encoding_vertices(const std::string& code);

/// Witness nodes grouped by distance from the witness root.
std::vector<std::vector<std::string>> witness_layers(const Certificate& c);

struct CertifyReport {
  std::size_t order = 0;
  std::size_t min_degree = 0;
  Rational avg_degree;
  Radius radius = Radius::infinite();
  bool in_range = false;     // every vertex id < n(G)
  bool degree_ok = false;    // even: min degree >= 2t; odd: average >= 2t+1
  bool radius_ok = false;    // even: <= r; odd: <= r+1
  bool order_ok = false;     // even: < r t^2 + r t; odd: <= r (4t^2 + 2t)
  bool witness_ok = false;   // arcs name exactly the certified vertices
  bool layers_disjoint = false;
  bool passes() const {
    return in_range && degree_ok && radius_ok && order_ok && witness_ok && layers_disjoint;
  }
};

/// Recomputes everything from `g` and the vertex set; stored measurements are
/// not consulted.
CertifyReport certify(const Graph& g, const Certificate& c);

/// Line 1 "mode t r", line 2 the vertex ids, then one "parent child" arc per
/// line. '#' lines are comments.
void write_certificate(std::ostream& out, const Certificate& c);
Certificate load_certificate(std::istream& in);

enum class ExtractionFailure { no_top_good_structure, split_failed, case2_exhausted, caps_exceeded };

const char* to_string(ExtractionFailure f);

struct ExtractOptions {
  std::size_t t = 2;
  std::size_t r = 2;
  std::size_t theta = 1;
  SplitMode mode = SplitMode::even;
  std::uint64_t seed = 1;
  std::size_t max_split_attempts = 20;
  std::optional<std::uint64_t> collision_threshold;  // default_collision_threshold when unset
  AuxCaps caps;
};

struct ExtractionStats {
  std::vector<std::size_t> layer_sizes;
  std::vector<std::size_t> max_in_count;  // per layer, largest number of in-arcs
  std::uint64_t threshold = 0;
  std::size_t split_attempts = 0;
  std::size_t collision_layer = 0;
  std::size_t collision_multiplicity = 0;
  bool short_circuit = false;
};

struct ExtractionOutcome {
  std::optional<Certificate> certificate;
  std::optional<ExtractionFailure> failure;
  std::string detail;
  ExtractionStats stats;
  std::optional<Partition> partition;

  bool ok() const { return certificate.has_value(); }
};

/// Layered BFS extraction. Odd mode first looks for K_{t+1,2t^2+3t+1} in g,
/// then works on bipartite_half(g). Every returned certificate has been
/// certified against g.
ExtractionOutcome extract(const Graph& g, const ExtractOptions& opt);

}  // namespace dn
