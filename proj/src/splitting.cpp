#include "dn/splitting.hpp"

#include "dn/combinatorics.hpp"
#include "dn/counting.hpp"
#include "dn/rng.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace dn {
namespace {

// Candidate aux vertices that live inside class j and inside N*(S) or G_M,
// in canonical order.
std::vector<std::size_t> even_candidates(const AuxGraph& aux, const std::vector<Vertex>& inside) {
  std::vector<std::size_t> out;
  const std::size_t t = aux.t();
  std::vector<Vertex> pick(t);
  for_each_combination(inside.size(), t, [&](std::span<const std::uint32_t> idx) {
    for (std::size_t k = 0; k < t; ++k) pick[k] = inside[idx[k]];
    out.push_back(*aux.find_tset(pick));
    return true;
  });
  return out;
}

std::vector<std::size_t> odd_candidates(const Graph& g, const AuxGraph& aux,
                                        const VertexSet& inside) {
  std::vector<Edge> local;
  std::vector<std::uint32_t> ids;
  const auto& edges = g.edges();
  for (std::uint32_t id = 0; id < edges.size(); ++id) {
    if (inside.test(edges[id].u) && inside.test(edges[id].v)) {
      local.push_back(edges[id]);
      ids.push_back(id);
    }
  }
  std::vector<std::size_t> out;
  std::vector<std::uint32_t> key(aux.t());
  for_each_matching(local, g.n(), aux.t(), [&](std::span<const std::uint32_t> idx) {
    for (std::size_t k = 0; k < idx.size(); ++k) key[k] = ids[idx[k]];
    out.push_back(*aux.find_matching(key));
    return true;
  });
  return out;
}

std::vector<std::size_t> greedy_vertex_disjoint(const AuxGraph& aux,
                                                std::span<const std::size_t> members,
                                                std::size_t n) {
  std::vector<std::uint8_t> used(n, 0);
  std::vector<std::size_t> out;
  for (std::size_t idx : members) {
    const std::vector<Vertex> vs = aux.host_vertices(idx);
    if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (Vertex v : vs) used[v] = 1;
    out.push_back(idx);
  }
  return out;
}

std::vector<std::size_t> greedy_edge_disjoint(const AuxGraph& aux,
                                              std::span<const std::size_t> members,
                                              std::size_t m) {
  std::vector<std::uint8_t> used(m, 0);
  std::vector<std::size_t> out;
  for (std::size_t idx : members) {
    auto ids = aux.edge_ids(idx);
    if (std::any_of(ids.begin(), ids.end(), [&](std::uint32_t e) { return used[e] != 0; })) {
      continue;
    }
    for (std::uint32_t e : ids) used[e] = 1;
    out.push_back(idx);
  }
  return out;
}

std::size_t top_level(const GoodnessTable& table, std::size_t v) {
  std::size_t i = 0;
  while (i < table.h && table.good(v, i + 1)) ++i;
  return i;
}

std::string next_data_line(std::istream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line;
  }
  throw ParseError(line_no, "unexpected end of input");
}

}  // namespace

void Hypergraph::validate() const {
  std::set<std::vector<Vertex>> seen;
  for (const auto& e : edges) {
    if (e.size() != t) throw Error(ErrorKind::invalid_argument, "hyperedge of wrong size");
    if (!std::is_sorted(e.begin(), e.end()) ||
        std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorKind::invalid_argument, "hyperedge must be sorted and distinct");
    }
    if (!e.empty() && e.back() >= n) throw Error(ErrorKind::out_of_range, "hyperedge vertex out of range");
    if (!seen.insert(e).second) throw Error(ErrorKind::duplicate_edge, "repeated hyperedge");
  }
}

std::size_t Hypergraph::max_degree() const {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges)
    for (Vertex v : e) ++deg[v];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::size_t> greedy_hypergraph_matching(const Hypergraph& h) {
  h.validate();
  std::vector<std::size_t> order(h.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return h.edges[a] < h.edges[b]; });
  std::vector<std::uint8_t> used(h.n, 0);
  std::vector<std::size_t> out;
  for (std::size_t i : order) {
    const auto& e = h.edges[i];
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (Vertex v : e) used[v] = 1;
    out.push_back(i);
  }
  return out;
}

SpanningSelection spanning_selection(std::span<const std::vector<Vertex>> edges, std::size_t m) {
  SpanningSelection s;
  if (!edges.empty()) {
    std::set<std::vector<Vertex>> distinct(edges.begin(), edges.end());
    s.hypothesis_met = BigInt(distinct.size()) >= binomial(m, edges.front().size());
  }
  std::set<Vertex> covered;
  for (std::size_t i = 0; i < edges.size() && covered.size() < m; ++i) {
    const auto& e = edges[i];
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return covered.count(v) != 0; })) continue;
    covered.insert(e.begin(), e.end());
    s.chosen.push_back(i);
  }
  s.covered.assign(covered.begin(), covered.end());
  s.reached = covered.size() >= m;
  return s;
}

std::vector<std::size_t> two_phase_disjoint(std::span<const std::vector<Edge>> matchings) {
  std::set<Edge> used_edges;
  std::vector<std::size_t> phase1;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    const auto& m = matchings[i];
    if (std::any_of(m.begin(), m.end(), [&](const Edge& e) { return used_edges.count(e) != 0; })) {
      continue;
    }
    used_edges.insert(m.begin(), m.end());
    phase1.push_back(i);
  }
  std::set<Vertex> used;
  std::vector<std::size_t> out;
  for (std::size_t i : phase1) {
    const auto& m = matchings[i];
    if (std::any_of(m.begin(), m.end(),
                    [&](const Edge& e) { return used.count(e.u) || used.count(e.v); })) {
      continue;
    }
    for (const Edge& e : m) used.insert({e.u, e.v});
    out.push_back(i);
  }
  return out;
}

std::vector<Vertex> Partition::class_members(std::uint32_t j) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < color_of.size(); ++v) {
    if (color_of[v] == j) out.push_back(v);
  }
  return out;
}

void Partition::swap_colors(std::uint32_t j, std::uint32_t k) {
  for (auto& c : color_of) {
    if (c == j) {
      c = k;
    } else if (c == k) {
      c = j;
    }
  }
}

Partition random_partition(std::size_t n, std::size_t h, std::uint64_t seed) {
  if (h == 0) throw Error(ErrorKind::invalid_argument, "h must be at least 1");
  Partition p;
  p.h = h;
  p.seed = seed;
  p.attempts_used = 1;
  Rng rng(seed);
  p.color_of.resize(n);
  for (auto& c : p.color_of) c = static_cast<std::uint32_t>(1 + rng.below(h));
  return p;
}

void write_partition(std::ostream& out, const Partition& p) {
  out << "# rng=" << Rng::kId << " seed=" << p.seed << " attempts=" << p.attempts_used << '\n';
  out << p.h << ' ' << p.n() << '\n';
  for (Vertex v = 0; v < p.n(); ++v) out << v << ' ' << p.color_of[v] << '\n';
}

Partition load_partition(std::istream& in) {
  std::size_t line_no = 0;
  Partition p;
  std::size_t n = 0;
  {
    std::istringstream hdr(next_data_line(in, line_no));
    if (!(hdr >> p.h >> n) || p.h == 0) throw ParseError(line_no, "header must be 'h n' with h >= 1");
  }
  p.color_of.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::istringstream row(next_data_line(in, line_no));
    std::size_t v = 0, c = 0;
    if (!(row >> v >> c)) throw ParseError(line_no, "line must be 'vertex color'");
    if (v >= n) throw ParseError(line_no, "vertex out of range");
    if (c < 1 || c > p.h) throw ParseError(line_no, "color must lie in 1..h");
    if (p.color_of[v] != 0) throw ParseError(line_no, "vertex listed twice");
    p.color_of[v] = static_cast<std::uint32_t>(c);
  }
  return p;
}

const char* to_string(SplitMode m) { return m == SplitMode::even ? "even" : "odd"; }

SplitMode parse_split_mode(const std::string& s) {
  if (s == "even") return SplitMode::even;
  if (s == "odd") return SplitMode::odd;
  throw Error(ErrorKind::invalid_argument, "mode must be 'even' or 'odd'");
}

const FamilyRecord* SplitValidation::find(std::size_t structure, std::size_t level,
                                          std::uint32_t cls) const {
  auto key = std::make_tuple(structure, level, cls);
  auto it = std::lower_bound(records.begin(), records.end(), key, [](const FamilyRecord& r, const auto& k) {
    return std::make_tuple(r.structure, r.level, r.cls) < k;
  });
  if (it == records.end() || std::make_tuple(it->structure, it->level, it->cls) != key) return nullptr;
  return &*it;
}

SplitValidation validate_split(const Graph& g, const AuxGraph& aux, const GoodnessTable& table,
                               const Partition& p, std::size_t theta, SplitMode mode) {
  if (p.n() != g.n()) throw Error(ErrorKind::invalid_argument, "partition size differs from n");
  if (table.h != p.h || table.size() != aux.size()) {
    throw Error(ErrorKind::invalid_argument, "goodness table does not match aux graph / h");
  }
  if ((mode == SplitMode::even) != (aux.kind() == AuxKind::biclique_aux)) {
    throw Error(ErrorKind::invalid_argument, "aux kind does not match split mode");
  }
  if (mode == SplitMode::odd && !g.has_bipartition()) {
    throw Error(ErrorKind::missing_bipartition, "odd split needs a bipartite graph with sides");
  }
  const std::size_t h = p.h;
  SplitValidation v;
  v.mode = mode;
  v.h = h;
  v.theta = theta;

  std::vector<VertexSet> class_mask(h + 1, VertexSet(g.n()));
  for (Vertex x = 0; x < g.n(); ++x) class_mask[p.color_of[x]].set(x);

  for (std::size_t s = 0; s < aux.size(); ++s) {
    const std::size_t top = top_level(table, s);
    if (top == 0) continue;
    VertexSet inside(g.n());
    if (mode == SplitMode::even) {
      for (Vertex x : common_neighborhood(g, aux.host_vertices(s))) inside.set(x);
    } else {
      const TMatching m = aux.matching(s);
      inside = link_mask(g, m.edges());
    }
    for (std::uint32_t j = 1; j <= h; ++j) {
      const VertexSet in_class = inside & class_mask[j];
      std::vector<std::size_t> cand;
      if (mode == SplitMode::even) {
        std::vector<Vertex> members;
        for (auto x = in_class.find_first(); x != VertexSet::npos; x = in_class.find_next(x)) {
          members.push_back(static_cast<Vertex>(x));
        }
        cand = even_candidates(aux, members);
      } else {
        cand = odd_candidates(g, aux, in_class);
      }
      for (std::size_t i = 1; i <= top; ++i) {
        std::vector<std::size_t> good;
        for (std::size_t c : cand) {
          if (table.good(c, i - 1)) good.push_back(c);
        }
        FamilyRecord rec{s, i, j, {}};
        if (mode == SplitMode::even) {
          rec.family = greedy_vertex_disjoint(aux, good, g.n());
        } else {
          rec.family = greedy_vertex_disjoint(aux, greedy_edge_disjoint(aux, good, g.m()), g.n());
        }
        if (rec.family.size() < theta) ++v.short_records;
        v.records.push_back(std::move(rec));
      }
    }
  }
  // Records were produced in (structure, class, level) order; find() wants
  // (structure, level, class).
  std::sort(v.records.begin(), v.records.end(), [](const FamilyRecord& a, const FamilyRecord& b) {
    return std::tie(a.structure, a.level, a.cls) < std::tie(b.structure, b.level, b.cls);
  });

  for (std::size_t s = 0; s < aux.size(); ++s) {
    if (!table.good(s, h) || aux.graph().degree(static_cast<Vertex>(s)) == 0) continue;
    const auto vs = aux.host_vertices(s);
    const std::uint32_t c = p.color_of[vs.front()];
    if (std::all_of(vs.begin(), vs.end(), [&](Vertex x) { return p.color_of[x] == c; })) {
      v.monochromatic_top = s;
      break;
    }
  }
  v.passes = v.short_records == 0 && v.monochromatic_top.has_value();
  return v;
}

SplitValidation validate_split(const Graph& g, const Partition& p, std::size_t t,
                               std::size_t theta, SplitMode mode, const AuxCaps& caps) {
  const AuxGraph aux =
      build_aux(g, t, mode == SplitMode::even ? AuxKind::biclique_aux : AuxKind::htt_aux, caps);
  const GoodnessTable table = classify_goodness(aux.graph(), p.h);
  return validate_split(g, aux, table, p, theta, mode);
}

std::optional<std::string> recheck_split(const Graph& g, const AuxGraph& aux,
                                         const GoodnessTable& table, const Partition& p,
                                         const SplitValidation& v) {
  std::size_t expected = 0;
  for (std::size_t s = 0; s < aux.size(); ++s) expected += top_level(table, s) * p.h;
  if (expected != v.records.size()) return "record count mismatch";

  std::size_t short_records = 0;
  for (const FamilyRecord& r : v.records) {
    const std::string where = "structure " + aux.encode(r.structure) + " level " +
                              std::to_string(r.level) + " class " + std::to_string(r.cls);
    if (!table.good(r.structure, r.level)) return where + ": structure not good at level";
    if (r.family.size() < v.theta) ++short_records;
    const std::vector<Vertex> sv = aux.host_vertices(r.structure);
    std::vector<Vertex> used;
    for (std::size_t member : r.family) {
      if (!table.good(member, r.level - 1)) return where + ": member not good";
      for (Vertex x : aux.host_vertices(member)) {
        if (p.color_of[x] != r.cls) return where + ": member outside class";
        if (std::find(used.begin(), used.end(), x) != used.end()) return where + ": overlap";
        used.push_back(x);
        if (std::find(sv.begin(), sv.end(), x) != sv.end()) return where + ": meets structure";
        // Even: x joined to all of S. Odd: x joined to every vertex of M on
        // the opposite side.
        for (Vertex y : sv) {
          const bool needs = v.mode == SplitMode::even || g.in_side_a(x) != g.in_side_a(y);
          if (needs && !g.adjacent(x, y)) return where + ": member outside neighborhood";
        }
      }
      if (v.mode == SplitMode::odd) {
        const TMatching mm = aux.matching(member);
        for (const Edge& e : mm.edges()) {
          if (!g.adjacent(e.u, e.v)) return where + ": member edge missing";
        }
      }
    }
  }
  if (short_records != v.short_records) return "short record count mismatch";
  if (v.monochromatic_top) {
    const std::size_t s = *v.monochromatic_top;
    if (!table.good(s, p.h)) return "top not (h,h)-good";
    const auto vs = aux.host_vertices(s);
    for (Vertex x : vs) {
      if (p.color_of[x] != p.color_of[vs.front()]) return "top not monochromatic";
    }
  }
  if (v.passes != (short_records == 0 && v.monochromatic_top.has_value())) return "pass flag wrong";
  return std::nullopt;
}

void write_split_csv(std::ostream& out, const SplitValidation& v, const AuxGraph& aux) {
  out << kSplitCsvHeader << '\n';
  for (const FamilyRecord& r : v.records) {
    out << r.level << ',' << r.cls << ',' << aux.encode(r.structure) << ',' << r.family.size()
        << ',' << v.theta << ',' << (r.family.size() >= v.theta ? "true" : "false") << '\n';
  }
}

SplitOutcome split_with_retries(const Graph& g, const AuxGraph& aux, const GoodnessTable& table,
                                std::size_t h, std::size_t theta, SplitMode mode,
                                std::size_t max_attempts, std::uint64_t seed) {
  SplitOutcome out;
  for (std::size_t k = 0; k < max_attempts; ++k) {
    Partition p = random_partition(g.n(), h, derive_seed(seed, k));
    p.attempts_used = k + 1;
    SplitValidation v = validate_split(g, aux, table, p, theta, mode);
    out.attempts.push_back({p.seed, v.short_records, v.monochromatic_top.has_value(), v.passes});
    const bool better =
        !out.validation ||
        std::make_tuple(!v.monochromatic_top.has_value(), v.short_records) <
            std::make_tuple(!out.validation->monochromatic_top.has_value(),
                            out.validation->short_records);
    if (better) {
      out.partition = p;
      out.validation = std::move(v);
    }
    if (out.validation->passes) {
      out.success = true;
      break;
    }
  }
  return out;
}

BigInt integer_root_ceil(const BigInt& x, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::invalid_argument, "root degree must be positive");
  if (x <= 0) return 0;
  BigInt hi = 1;
  while (power(hi, k) < x) hi *= 2;
  BigInt lo = hi / 2;  // lo^k < x <= hi^k (or lo = 0)
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (power(mid, k) >= x) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return power(lo, k) >= x ? lo : hi;
}

BigInt coloring_constant_even(std::size_t h, std::size_t t, std::uint64_t b) {
  const BigInt rhs = power(BigInt(3), h) *
                     power(BigInt(4) * b * t * t * power(BigInt(h), t), t);
  return integer_root_ceil(rhs + 1, t * t);
}

BigInt coloring_constant_odd(std::size_t h, std::size_t t, std::uint64_t b, std::uint64_t q) {
  // Multiply through by 1/c'_t = 2^{5t^2+4t+1} (t!)^{t+1}.
  const BigInt inner = BigInt(q) * power(BigInt(t), 3) * power(BigInt(2), t + 3) * b *
                       power(BigInt(h), 2 * t);
  const BigInt rhs = power(BigInt(3), h) * power(inner, t) *
                     power(BigInt(2), 5 * t * t + 4 * t + 1) * power(factorial(t), t + 1);
  return integer_root_ceil(rhs, t * (2 * t + 1));
}

BigInt family_theta(SplitMode mode, std::size_t n, std::size_t t, std::size_t r, std::uint64_t b) {
  if (r == 0) throw Error(ErrorKind::invalid_argument, "r must be at least 1");
  const std::size_t e = mode == SplitMode::even ? t : 2 * t + 1;
  return integer_root_ceil(power(BigInt(b), r) * power(BigInt(n), e), r);
}

}  // namespace dn
