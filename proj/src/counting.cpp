#include "dn/counting.hpp"

#include "dn/combinatorics.hpp"
#include "dn/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace dn {
namespace {

void require_t(std::size_t t) {
  if (t == 0) throw Error(ErrorKind::invalid_argument, "t must be at least 1");
}

void require_bipartition(const Graph& g) {
  if (!g.has_bipartition()) {
    throw Error(ErrorKind::missing_bipartition, "operation needs a bipartite graph with sides");
  }
}

// Counts t-subsets of pairwise vertex-disjoint pairs. Pairs may repeat; a
// repeated pair shares its endpoints with itself and is never co-chosen.
class DisjointCounter {
 public:
  DisjointCounter(std::span<const Edge> pairs, std::size_t n, std::uint64_t* steps = nullptr,
                  std::uint64_t budget = 0)
      : pairs_(pairs), used_(n, 0), steps_(steps), budget_(budget) {}

  BigInt count(std::size_t t) {
    if (t == 0) return 1;
    total_ = CountAccumulator();
    recurse(0, t);
    return total_.value();
  }

 private:
  void tick() {
    if (steps_ && ++*steps_ > budget_) {
      throw Error(ErrorKind::cap_exceeded, "enumeration step budget exceeded");
    }
  }

  void recurse(std::size_t from, std::size_t left) {
    if (left == 1) {
      std::uint64_t c = 0;
      for (std::size_t i = from; i < pairs_.size(); ++i) {
        tick();
        if (!used_[pairs_[i].u] && !used_[pairs_[i].v]) ++c;
      }
      total_.add(c);
      return;
    }
    for (std::size_t i = from; i + left <= pairs_.size(); ++i) {
      tick();
      const Edge& e = pairs_[i];
      if (used_[e.u] || used_[e.v]) continue;
      used_[e.u] = used_[e.v] = 1;
      recurse(i + 1, left - 1);
      used_[e.u] = used_[e.v] = 0;
    }
  }

  std::span<const Edge> pairs_;
  std::vector<std::uint8_t> used_;
  std::uint64_t* steps_;
  std::uint64_t budget_;
  CountAccumulator total_;
};

void matching_walk(std::span<const Edge> edges, std::vector<std::uint8_t>& used,
                   std::vector<std::uint32_t>& chosen, std::size_t from, std::size_t t,
                   const std::function<bool(std::span<const std::uint32_t>)>& f, bool& stop) {
  if (chosen.size() == t) {
    if (!f(chosen)) stop = true;
    return;
  }
  for (std::size_t i = from; i < edges.size() && !stop; ++i) {
    const Edge& e = edges[i];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    chosen.push_back(static_cast<std::uint32_t>(i));
    matching_walk(edges, used, chosen, i + 1, t, f, stop);
    chosen.pop_back();
    used[e.u] = used[e.v] = 0;
  }
}

std::vector<Vertex> mask_members(const VertexSet& m) {
  std::vector<Vertex> out;
  out.reserve(m.count());
  for (auto i = m.find_first(); i != VertexSet::npos; i = m.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

// Sum over unordered s-sets of vertex-disjoint oriented edges (x_i -> y_i) of
// the number of unordered t-sets of disjoint oriented edges (p_j -> q_j) with
// p_j in N*(x's) \ V(M) and q_j in N*(y's) \ V(M). Equals embeddings / (s! t!).
BigInt oriented_hst_sum(const Graph& g, std::size_t s, std::size_t t, std::uint64_t* steps,
                        std::uint64_t budget) {
  std::vector<std::pair<Vertex, Vertex>> oriented;
  oriented.reserve(2 * g.m());
  for (const Edge& e : g.edges()) {
    oriented.emplace_back(e.u, e.v);
    oriented.emplace_back(e.v, e.u);
  }
  std::vector<std::uint8_t> used(g.n(), 0);
  std::vector<Vertex> tails, heads;
  CountAccumulator total;

  auto tick = [&] {
    if (++*steps > budget) throw Error(ErrorKind::cap_exceeded, "H_{s,t} step budget exceeded");
  };

  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (tails.size() == s) {
      VertexSet p = common_neighbor_mask(g, tails);
      VertexSet q = common_neighbor_mask(g, heads);
      for (Vertex v : tails) p.reset(v), q.reset(v);
      for (Vertex v : heads) p.reset(v), q.reset(v);
      std::vector<Edge> cand;
      for (auto a = p.find_first(); a != VertexSet::npos; a = p.find_next(a)) {
        for (Vertex b : g.neighbors(static_cast<Vertex>(a))) {
          tick();
          if (q.test(b)) cand.emplace_back(static_cast<Vertex>(a), b);
        }
      }
      if (cand.size() >= t) {
        DisjointCounter counter(cand, g.n(), steps, budget);
        total.add(counter.count(t));
      }
      return;
    }
    for (std::size_t i = from; i < oriented.size(); ++i) {
      tick();
      auto [x, y] = oriented[i];
      if (used[x] || used[y]) continue;
      used[x] = used[y] = 1;
      tails.push_back(x);
      heads.push_back(y);
      pick(i + 1);
      tails.pop_back();
      heads.pop_back();
      used[x] = used[y] = 0;
    }
  };
  pick(0);
  return total.value();
}

}  // namespace

const char* to_string(Structure s) {
  switch (s) {
    case Structure::star_t: return "star_t";
    case Structure::biclique_tt: return "biclique_tt";
    case Structure::t_matching: return "t_matching";
    case Structure::cherry_A: return "cherry_A";
    case Structure::cherry_B: return "cherry_B";
    case Structure::c4: return "c4";
    case Structure::h_1t: return "h_1t";
    case Structure::spider_t: return "spider_t";
    case Structure::h_st: return "h_st";
  }
  return "?";
}

Structure parse_structure(const std::string& name) {
  for (Structure s : {Structure::star_t, Structure::biclique_tt, Structure::t_matching,
                      Structure::cherry_A, Structure::cherry_B, Structure::c4, Structure::h_1t,
                      Structure::spider_t, Structure::h_st}) {
    if (name == to_string(s)) return s;
  }
  throw Error(ErrorKind::invalid_argument, "unknown structure '" + name + "'");
}

std::string to_csv_row(const CountReport& r) {
  std::ostringstream os;
  os << to_string(r.structure) << ',' << r.t << ',' << r.n << ',' << r.m << ',' << r.count << ','
     << numerator(r.bound_value) << ',' << denominator(r.bound_value) << ','
     << (r.hypotheses_met ? "true" : "false");
  return os.str();
}

std::vector<Edge> edges_within(const Graph& g, const VertexSet& mask) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (mask.test(e.u) && mask.test(e.v)) out.push_back(e);
  }
  return out;
}

BigInt count_matchings(std::span<const Edge> edges, std::size_t n, std::size_t t) {
  if (edges.size() < t) return t == 0 ? 1 : 0;
  return DisjointCounter(edges, n).count(t);
}

void for_each_matching(std::span<const Edge> edges, std::size_t n, std::size_t t,
                       const std::function<bool(std::span<const std::uint32_t>)>& f) {
  std::vector<std::uint8_t> used(n, 0);
  std::vector<std::uint32_t> chosen;
  chosen.reserve(t);
  bool stop = false;
  matching_walk(edges, used, chosen, 0, t, f, stop);
}

BigInt count_stars(const Graph& g, std::size_t t) {
  require_t(t);
  BigInt total = 0;
  for (Vertex v = 0; v < g.n(); ++v) total += binomial(g.degree(v), t);
  return total;
}

Rational biclique_constant(std::size_t t) {
  const long long e = static_cast<long long>(t * t) - static_cast<long long>(t) - 3;
  const BigInt f = factorial(t);
  Rational c = e >= 0 ? Rational(power(BigInt(2), e)) : Rational(1, power(BigInt(2), -e));
  return c / Rational(f * f);
}

CountReport count_bicliques(const Graph& g, std::size_t t, const CountCaps& caps) {
  require_t(t);
  const std::size_t n = g.n();
  if (t <= n && binomial(n, t) > caps.max_tsets) {
    throw Error(ErrorKind::cap_exceeded, "C(n,t) exceeds the t-set cap");
  }
  CountReport r;
  r.structure = Structure::biclique_tt;
  r.t = t;
  r.n = n;
  r.m = g.m();
  BigInt twice = 0;
  std::vector<Vertex> s(t);
  for_each_combination(n, t, [&](std::span<const std::uint32_t> idx) {
    for (std::size_t i = 0; i < t; ++i) s[i] = idx[i];
    twice += binomial(common_neighbor_mask(g, s).count(), t);
    return true;
  });
  r.count = twice / 2;

  const BigInt e = g.m();
  if (n > 0) {
    r.bound_value = biclique_constant(t) * Rational(power(e, t * t)) /
                    Rational(power(BigInt(n), 2 * t * t - 2 * t));
  }
  r.hypotheses_met =
      n >= t * t && power(e, t) >= power(BigInt(t), t) * power(BigInt(n), 2 * t - 1);
  return r;
}

MatchingBounds matching_bounds(std::size_t edges, std::size_t max_degree, std::size_t t) {
  MatchingBounds b;
  const BigInt et = power(BigInt(edges), t);
  const BigInt tf = factorial(t);
  b.weak_met = edges >= 4 * max_degree * t;
  b.weak = Rational(et, power(BigInt(2), t) * tf);
  b.strong_met = edges >= 4 * max_degree * t * t;
  b.strong = Rational(et, 2 * tf);
  return b;
}

CountReport count_t_matchings(const Graph& g, std::size_t t) {
  require_t(t);
  CountReport r;
  r.structure = Structure::t_matching;
  r.t = t;
  r.n = g.n();
  r.m = g.m();
  r.count = count_matchings(g.edges(), g.n(), t);
  const MatchingBounds b = matching_bounds(g.m(), g.max_degree(), t);
  r.bound_value = b.strong_met ? b.strong : b.weak;
  r.hypotheses_met = b.weak_met;
  return r;
}

CherryCounts count_cherries_and_c4(const Graph& g) {
  require_bipartition(g);
  CherryCounts c;
  for (Vertex v = 0; v < g.n(); ++v) {
    (g.in_side_a(v) ? c.w_a : c.w_b) += binomial(g.degree(v), 2);
  }
  const std::vector<Vertex> a = g.side_a();
  std::vector<VertexSet> rows;
  rows.reserve(a.size());
  for (Vertex v : a) rows.push_back(g.neighbor_set(v));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      c.c4 += binomial((rows[i] & rows[j]).count(), 2);
    }
  }
  return c;
}

CherryBoundCheck check_cherry_bounds(const Graph& g, const CherryCounts& c) {
  require_bipartition(g);
  const BigInt e = g.m();
  const BigInt na = g.side_a().size();
  const BigInt nb = g.n() - g.side_a().size();
  const BigInt n = g.n();
  CherryBoundCheck k;
  k.hypothesis = e * e >= n * n * n;
  // Each bound is stated as a cross-multiplied integer inequality; empty sides
  // force E = 0 and the bounds hold trivially.
  k.w_a = na == 0 || 4 * na * c.w_a >= e * e;
  k.w_b = nb == 0 || 4 * nb * c.w_b >= e * e;
  k.c4_from_w_a = nb == 0 || 2 * nb * nb * c.c4 >= c.w_a * c.w_a;
  k.c4_from_w_b = na == 0 || 2 * na * na * c.c4 >= c.w_b * c.w_b;
  k.c4_from_e = na == 0 || nb == 0 || 32 * na * na * nb * nb * c.c4 >= power(e, 4);
  return k;
}

std::vector<CountReport> cherry_reports(const Graph& g) {
  const CherryCounts c = count_cherries_and_c4(g);
  const BigInt e = g.m();
  const std::size_t na = g.side_a().size();
  const std::size_t nb = g.n() - na;
  const bool hyp = e * e >= power(BigInt(g.n()), 3);
  auto make = [&](Structure s, const BigInt& count, Rational bound) {
    CountReport r;
    r.structure = s;
    r.t = s == Structure::c4 ? 2 : 1;
    r.n = g.n();
    r.m = g.m();
    r.count = count;
    r.bound_value = std::move(bound);
    r.hypotheses_met = hyp;
    return r;
  };
  auto safe = [](const BigInt& num, const BigInt& den) {
    return den == 0 ? Rational(0) : Rational(num, den);
  };
  return {
      make(Structure::cherry_A, c.w_a, safe(e * e, 4 * BigInt(na))),
      make(Structure::cherry_B, c.w_b, safe(e * e, 4 * BigInt(nb))),
      make(Structure::c4, c.c4, safe(power(e, 4), 32 * BigInt(na) * na * nb * nb)),
  };
}

VertexSet link_mask(const Graph& g, std::span<const Edge> anchor) {
  std::vector<Vertex> in_a, in_b;
  for (const Edge& e : anchor) {
    for (Vertex v : {e.u, e.v}) (g.in_side_a(v) ? in_a : in_b).push_back(v);
  }
  VertexSet x = common_neighbor_mask(g, in_b);
  VertexSet y = common_neighbor_mask(g, in_a);
  VertexSet out = x | y;
  for (Vertex v : in_a) out.reset(v);
  for (Vertex v : in_b) out.reset(v);
  return out;
}

LinkGraph link_graph(const Graph& g, const TMatching& anchor) {
  require_bipartition(g);
  check_matching_in(g, anchor);
  LinkGraph lg;
  lg.anchor = anchor;
  const VertexSet mask = link_mask(g, anchor.edges());
  for (Vertex v : mask_members(mask)) (g.in_side_a(v) ? lg.x_side : lg.y_side).push_back(v);
  lg.graph = induced_subgraph(g, mask_members(mask));
  return lg;
}

LinkGraph link_graph(const Graph& g, Edge anchor) {
  return link_graph(g, TMatching({anchor}));
}

H1tCounts count_h1t(const Graph& g, std::size_t t) {
  require_t(t);
  require_bipartition(g);
  H1tCounts out;
  std::set<std::vector<std::uint32_t>> copies;
  for (const Edge& e : g.edges()) {
    const Vertex x = g.in_side_a(e.u) ? e.u : e.v;  // x in A
    const Vertex y = x == e.u ? e.v : e.u;
    const std::vector<Edge> anchor{e};
    const std::vector<Edge> local = edges_within(g, link_mask(g, anchor));
    const std::uint32_t eid = static_cast<std::uint32_t>(*g.edge_index(e));
    for_each_matching(local, g.n(), t, [&](std::span<const std::uint32_t> idx) {
      out.incidences += 1;
      std::vector<std::uint32_t> ids{eid};
      for (std::uint32_t i : idx) {
        const Edge& f = local[i];
        const Vertex xa = g.in_side_a(f.u) ? f.u : f.v;  // in X_e, adjacent to y
        const Vertex yb = xa == f.u ? f.v : f.u;         // in Y_e, adjacent to x
        ids.push_back(static_cast<std::uint32_t>(*g.edge_index(f)));
        ids.push_back(static_cast<std::uint32_t>(*g.edge_index(Edge(y, xa))));
        ids.push_back(static_cast<std::uint32_t>(*g.edge_index(Edge(x, yb))));
      }
      std::sort(ids.begin(), ids.end());
      copies.insert(std::move(ids));
      return true;
    });
  }
  out.copies = copies.size();
  return out;
}

Rational h1t_bound(const Graph& g, std::size_t t) {
  require_bipartition(g);
  const BigInt na = g.side_a().size();
  const BigInt nb = g.n() - g.side_a().size();
  if (na == 0 || nb == 0) return 0;
  const BigInt num = power(BigInt(g.m()), 3 * t + 1);
  const BigInt den = power(BigInt(2), 5 * t + 2) * factorial(t) * power(na, 2 * t) *
                     power(nb, 2 * t);
  return Rational(num, den);
}

bool h1t_hypothesis(const Graph& g, std::size_t t) {
  const BigInt e = g.m();
  return e * e >= 32 * BigInt(t) * power(BigInt(g.n()), 3);
}

BigInt count_htt_incidences(const Graph& g, std::size_t t) {
  require_t(t);
  require_bipartition(g);
  CountAccumulator total;
  std::vector<Edge> anchor(t);
  const auto& edges = g.edges();
  for_each_matching(edges, g.n(), t, [&](std::span<const std::uint32_t> idx) {
    for (std::size_t i = 0; i < t; ++i) anchor[i] = edges[idx[i]];
    const std::vector<Edge> local = edges_within(g, link_mask(g, anchor));
    total.add(count_matchings(local, g.n(), t));
    return true;
  });
  return total.value();
}

Rational htt_constant(std::size_t t) {
  const BigInt tf = factorial(t);
  return Rational(BigInt(1), power(BigInt(2), 5 * t * t + 4 * t + 1) * power(tf, t + 1));
}

Rational htt_bound(const Graph& g, std::size_t t) {
  if (g.n() == 0) return 0;
  return htt_constant(t) * Rational(power(BigInt(g.m()), 2 * t * t + 2 * t)) /
         Rational(power(BigInt(g.n()), 4 * t * t));
}

bool htt_hypothesis(const Graph& g, std::size_t t, std::size_t q) {
  return power(BigInt(g.m()), 2 * t + 1) >=
         power(BigInt(12 * q * t), 2 * t + 1) * power(BigInt(g.n()), 4 * t);
}

BigInt count_spiders(const Graph& g, std::size_t t) {
  require_t(t);
  CountAccumulator total;
  std::vector<Edge> legs;
  for (Vertex c = 0; c < g.n(); ++c) {
    legs.clear();
    for (Vertex mid : g.neighbors(c)) {
      for (Vertex leaf : g.neighbors(mid)) {
        if (leaf != c) legs.emplace_back(mid, leaf);
      }
    }
    total.add(count_matchings(legs, g.n(), t));
  }
  BigInt out = total.value();
  if (t == 1) out /= 2;  // a 2-edge path reverses onto itself
  return out;
}

BigInt count_hst(const Graph& g, std::size_t s, std::size_t t, const CountCaps& caps) {
  if (s == 0 || t == 0) throw Error(ErrorKind::invalid_argument, "s and t must be at least 1");
  if (g.n() > caps.hst_max_vertices) {
    throw Error(ErrorKind::cap_exceeded, "host has " + std::to_string(g.n()) +
                                             " vertices; H_{s,t} cap is " +
                                             std::to_string(caps.hst_max_vertices));
  }
  std::uint64_t steps = 0;
  const BigInt host = oriented_hst_sum(g, s, t, &steps, caps.hst_max_steps);
  std::uint64_t self_steps = 0;
  const BigInt self = oriented_hst_sum(h_st(s, t), s, t, &self_steps, UINT64_MAX);
  return host / self;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> find_biclique(
    const Graph& g, std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw Error(ErrorKind::invalid_argument, "p and q must be at least 1");
  const std::size_t n = g.n();
  std::vector<Vertex> chosen;
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> found;

  std::function<bool(Vertex, const VertexSet&)> dfs = [&](Vertex from, const VertexSet& common) {
    if (chosen.size() == p) {
      std::vector<Vertex> side = mask_members(common);
      side.resize(q);
      found.emplace(chosen, std::move(side));
      return true;
    }
    for (Vertex v = from; v + (p - chosen.size()) <= n; ++v) {
      if (g.degree(v) < q) continue;
      VertexSet next = chosen.empty() ? g.neighbor_set(v) : (common & g.neighbor_set(v));
      if (next.count() < q) continue;
      chosen.push_back(v);
      if (dfs(v + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(0, VertexSet(n));
  return found;
}

bool is_biclique_free(const Graph& g, std::size_t p, std::size_t q) {
  return !find_biclique(g, p, q).has_value();
}

FamilyExponent erdos_renyi_exponent(std::span<const Graph> family) {
  if (family.empty()) throw Error(ErrorKind::invalid_argument, "family is empty");
  FamilyExponent out;
  bool first = true;
  for (std::size_t j = 0; j < family.size(); ++j) {
    const Graph& f = family[j];
    if (f.n() > 10) throw Error(ErrorKind::invalid_argument, "family member exceeds 10 vertices");
    if (f.m() < 2) throw Error(ErrorKind::invalid_argument, "family member has fewer than 2 edges");
    std::vector<std::uint32_t> adj(f.n(), 0);
    for (const Edge& e : f.edges()) {
      adj[e.u] |= 1u << e.v;
      adj[e.v] |= 1u << e.u;
    }
    std::optional<Rational> gamma, cexp;
    std::uint32_t witness = 0;
    for (std::uint32_t w = 1; w < (1u << f.n()); ++w) {
      std::size_t twice = 0;
      for (std::uint32_t rest = w; rest; rest &= rest - 1) {
        twice += std::popcount(adj[std::countr_zero(rest)] & w);
      }
      const std::size_t e = twice / 2;
      const std::size_t k = std::popcount(w);
      if (e >= 1) {
        Rational c(k, e);
        if (!cexp || c < *cexp) cexp = c;
      }
      if (e >= 2) {
        Rational g(k - 2, e - 1);
        if (!gamma || g < *gamma) gamma = g, witness = w;
      }
    }
    if (first || *gamma > out.gamma) {
      out.gamma = *gamma;
      out.witness_member = j;
      out.witness_vertices.clear();
      for (Vertex v = 0; v < f.n(); ++v) {
        if (witness >> v & 1u) out.witness_vertices.push_back(v);
      }
      out.witness_subgraph = induced_subgraph(f, out.witness_vertices).graph;
    }
    if (first || *cexp > out.c_exponent) out.c_exponent = *cexp;
    first = false;
  }
  return out;
}

std::vector<Graph> materialize_density_family(const Rational& d, std::size_t m) {
  if (d < 2) throw Error(ErrorKind::invalid_argument, "d must be at least 2");
  if (m < 2 || m > 6) throw Error(ErrorKind::invalid_argument, "m must lie in 2..6");
  std::vector<Graph> out;
  for (std::size_t k = 2; k <= m; ++k) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < k; ++u) {
      for (Vertex v = u + 1; v < k; ++v) slots.emplace_back(u, v);
    }
    std::vector<std::vector<std::uint32_t>> perm_slot;  // slot index under each permutation
    std::vector<Vertex> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint32_t> map(slots.size());
      for (std::size_t i = 0; i < slots.size(); ++i) {
        Vertex a = perm[slots[i].first], b = perm[slots[i].second];
        if (a > b) std::swap(a, b);
        map[i] = static_cast<std::uint32_t>(
            std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin());
      }
      perm_slot.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      const std::size_t e = std::popcount(mask);
      if (Rational(2 * e, k) < d) continue;
      std::uint32_t canon = UINT32_MAX;
      for (const auto& map : perm_slot) {
        std::uint32_t img = 0;
        for (std::size_t i = 0; i < slots.size(); ++i) {
          if (mask >> i & 1u) img |= 1u << map[i];
        }
        canon = std::min(canon, img);
      }
      if (!seen.insert(canon).second) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (canon >> i & 1u) edges.emplace_back(slots[i].first, slots[i].second);
      }
      out.emplace_back(k, std::move(edges));
    }
  }
  return out;
}

Rational density_family_gamma(const Rational& d, std::size_t m) {
  const Rational denom = d * m / 2 - 1;
  if (denom <= 0) throw Error(ErrorKind::invalid_argument, "dm/2 must exceed 1");
  return Rational(static_cast<long long>(m) - 2) / denom;
}

bool binomial_floor_check(std::uint64_t x, std::uint64_t m) {
  if (m < 1 || x < m * m) throw Error(ErrorKind::precondition, "requires x >= m^2 >= 1");
  return binomial(x, m) * 2 * factorial(m) >= power(BigInt(x), m);
}

}  // namespace dn
