#pragma once

#include "dn/counting.hpp"
#include "dn/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dn {

enum class Side { A, B };

/// r_0 = 0 and r_i = 2^{i-2} / i^2. Not monotone: r_1 = 1/2 > r_2 = 1/4.
Rational degree_ratio(std::size_t i);

struct DegreeClass {
  std::size_t index = 0;         // i >= 2
  std::vector<Vertex> members;   // lowest-id floor(|side| / 2^i) vertices of the class
  std::size_t class_size = 0;    // |A_i| before trimming
  Rational lower;                // r_{i-1} base / |side|
  Rational upper;                // r_i base / |side|
};

/// Smallest i >= 2 whose window [r_{i-1} base/|side|, r_i base/|side|) holds
/// at least |side|/2^i vertices of `side`. Throws no_qualifying_index when no
/// class qualifies or the floored selection would be empty.
DegreeClass degree_class_select(const Graph& g, Side side, const Rational& base_edges);

struct RegularizationResult {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Vertex> a_prime;  // host ids
  std::vector<Vertex> b_prime;
  InducedSubgraph g_prime;
  std::size_t e_prime = 0;
  std::size_t host_edges = 0;
  std::size_t host_order = 0;
  std::size_t host_a = 0;
  std::size_t host_b = 0;
  Rational delta_a_cap;  // r_i E / |A|
  Rational delta_b_cap;  // r_j E / (8 i^2 |B|)
  // Checked before return.
  bool sizes_ok = false;
  bool edge_bound_ok = false;  // E' >= E / (64 i^2 j^2)
  bool windows_ok = false;     // every A' and B' degree inside its window
  bool verified() const { return sizes_ok && edge_bound_ok && windows_ok; }
};

/// Two-step selection: A' against E in G, then B' against E/(8 i^2) in the
/// graph G~ spanned by the edges at A'.
RegularizationResult regularize(const Graph& g);

/// Line 1 "i j |A'| |B'| E'", then G' in edge-list format. A comment line
/// records the host ids of G' in order.
void write_regularization(std::ostream& out, const RegularizationResult& r);

struct ThresholdFacts {
  bool r8_is_one = false;
  std::size_t argmax_square = 0;   // maximizer of i^2 / 2^{i/2} over i >= 2
  std::size_t argmax_quartic = 0;  // maximizer of i^4 / 2^{i/2}
  bool square_below_5 = false;
  bool quartic_below_328 = false;
};

/// Exact sweep over 2 <= i <= upto. Both sequences decrease from i = 12 on,
/// so upto >= 12 settles the maxima.
ThresholdFacts threshold_facts(std::size_t upto);

struct SpiderH1tReport {
  std::size_t t = 0;
  BigInt h1t = 0;      // H_{1,t} copies in G'
  BigInt spiders = 0;  // t-spider copies in G'
  std::optional<Rational> ratio;  // h1t / spiders; unset when spiders = 0
  bool hypothesis_met = false;    // E^{t+1} >= 2^{27(t+1)} C t! n^{2t+1} for the host
  bool bound_holds = false;       // h1t >= C spiders
};

SpiderH1tReport spider_vs_h1t_report(const RegularizationResult& r, std::size_t t, const Rational& c);

enum class Weight { light, heavy };

const char* to_string(Weight w);

struct MatchingWeightClass {
  TMatching matching;
  std::size_t link_edges = 0;  // E'_N
  Weight label = Weight::light;
};

/// Labels every t-matching of a bipartite graph: heavy iff E'_N > 4t^2.
std::vector<MatchingWeightClass> classify_heavy_light(const Graph& g, std::size_t t,
                                                      std::size_t max_matchings = 1'000'000);

struct ClaimReport {
  std::size_t t = 0;
  std::size_t anchors = 0;            // (t-1)-matchings examined
  std::size_t good_anchors = 0;       // E'_M > 4t^3 V'_M
  std::size_t claim1_violations = 0;  // heavy count > (t-1)/(t-2)! E'^{t-1} V'
  std::size_t claim2_violations = 0;  // light count < E'^t / (4 t!)
  std::vector<std::string> counterexamples;
  bool ok() const { return claim1_violations == 0 && claim2_violations == 0; }
};

/// Requires t >= 2 and an H_{t,t}-free bipartite input (precondition error
/// otherwise).
ClaimReport claim_bounds_check(const Graph& g, std::size_t t, std::size_t max_matchings = 1'000'000);

}  // namespace dn
