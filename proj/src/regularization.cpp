#include "dn/regularization.hpp"

#include "dn/combinatorics.hpp"
#include "dn/graph_io.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace dn {
namespace {

std::vector<Vertex> side_members(const Graph& g, Side side) {
  return side == Side::A ? g.side_a() : g.side_b();
}

std::vector<std::uint8_t> side_vector(const Graph& g) {
  std::vector<std::uint8_t> s(g.n());
  for (Vertex v = 0; v < g.n(); ++v) s[v] = g.in_side_a(v) ? 1 : 0;
  return s;
}

void require_sides(const Graph& g) {
  if (!g.has_bipartition()) {
    throw Error(ErrorKind::missing_bipartition, "input must carry a bipartition");
  }
}

std::size_t edges_inside(const Graph& g, const VertexSet& mask) {
  std::size_t k = 0;
  for (const Edge& e : g.edges()) k += mask.test(e.u) && mask.test(e.v);
  return k;
}

}  // namespace

Rational degree_ratio(std::size_t i) {
  if (i == 0) return 0;
  return Rational(power(BigInt(2), i), BigInt(4 * i * i));
}

DegreeClass degree_class_select(const Graph& g, Side side, const Rational& base_edges) {
  require_sides(g);
  const std::vector<Vertex> members = side_members(g, side);
  const std::size_t s = members.size();
  if (s == 0 || base_edges <= 0) {
    throw Error(ErrorKind::no_qualifying_index, "empty side or no edges");
  }
  std::size_t max_deg = 0;
  for (Vertex v : members) max_deg = std::max(max_deg, g.degree(v));
  const Rational unit = base_edges / s;

  for (std::size_t i = 2;; ++i) {
    const Rational lower = degree_ratio(i - 1) * unit;
    // r_i increases from i = 3 on, so once the window starts above every
    // degree all later classes are empty.
    if (i >= 4 && lower > max_deg) break;
    const Rational upper = degree_ratio(i) * unit;
    std::vector<Vertex> cls;
    for (Vertex v : members) {
      const Rational d(g.degree(v));
      if (d >= lower && d < upper) cls.push_back(v);
    }
    if (BigInt(cls.size()) * power(BigInt(2), i) < BigInt(s)) continue;
    const std::size_t keep = i >= 64 ? 0 : static_cast<std::size_t>(s >> i);
    if (keep == 0) {
      throw Error(ErrorKind::no_qualifying_index,
                  "class " + std::to_string(i) + " qualifies but floor(|side|/2^i) is 0");
    }
    DegreeClass out;
    out.index = i;
    out.class_size = cls.size();
    cls.resize(keep);
    out.members = std::move(cls);
    out.lower = lower;
    out.upper = upper;
    return out;
  }
  throw Error(ErrorKind::no_qualifying_index, "no degree class reaches |side|/2^i");
}

RegularizationResult regularize(const Graph& g) {
  require_sides(g);
  if (g.m() == 0) throw Error(ErrorKind::precondition, "graph has no edges");
  RegularizationResult r;
  r.host_edges = g.m();
  r.host_order = g.n();
  r.host_a = g.side_a().size();
  r.host_b = g.side_b().size();
  const Rational e(g.m());

  const DegreeClass ca = degree_class_select(g, Side::A, e);
  r.i = ca.index;
  r.a_prime = ca.members;

  VertexSet in_a(g.n());
  for (Vertex v : r.a_prime) in_a.set(v);
  std::vector<Edge> tilde;
  for (const Edge& x : g.edges()) {
    if (in_a.test(x.u) || in_a.test(x.v)) tilde.push_back(x);
  }
  const Graph g_tilde(g.n(), std::move(tilde), side_vector(g));
  const Rational base_b = e / (8 * r.i * r.i);
  const DegreeClass cb = degree_class_select(g_tilde, Side::B, base_b);
  r.j = cb.index;
  r.b_prime = cb.members;

  std::vector<Vertex> w = r.a_prime;
  w.insert(w.end(), r.b_prime.begin(), r.b_prime.end());
  r.g_prime = induced_subgraph(g, w);
  r.e_prime = r.g_prime.graph.m();
  r.delta_a_cap = ca.upper;
  r.delta_b_cap = cb.upper;

  r.sizes_ok = r.a_prime.size() == (r.host_a >> r.i) && r.b_prime.size() == (r.host_b >> r.j);
  r.edge_bound_ok = BigInt(r.e_prime) * 64 * r.i * r.i * r.j * r.j >= BigInt(r.host_edges);
  r.windows_ok = true;
  for (Vertex v : r.a_prime) {
    const Rational d(g.degree(v));
    r.windows_ok = r.windows_ok && d >= ca.lower && d < ca.upper;
  }
  for (Vertex v : r.b_prime) {
    const Rational d(g_tilde.degree(v));
    r.windows_ok = r.windows_ok && d >= cb.lower && d < cb.upper;
  }
  return r;
}

void write_regularization(std::ostream& out, const RegularizationResult& r) {
  out << "# host ids:";
  for (Vertex v : r.g_prime.original_id) out << ' ' << v;
  out << '\n';
  out << r.i << ' ' << r.j << ' ' << r.a_prime.size() << ' ' << r.b_prime.size() << ' '
      << r.e_prime << '\n';
  write_graph(out, r.g_prime.graph);
}

ThresholdFacts threshold_facts(std::size_t upto) {
  ThresholdFacts f;
  f.r8_is_one = degree_ratio(8) == 1;
  // Compare x^k / 2^{x/2} through squares: x^{2k} / 2^x.
  auto value = [](std::size_t x, std::size_t k) {
    return Rational(power(BigInt(x), 2 * k), power(BigInt(2), x));
  };
  Rational best2 = -1, best4 = -1;
  for (std::size_t x = 2; x <= upto; ++x) {
    if (value(x, 2) > best2) {
      best2 = value(x, 2);
      f.argmax_square = x;
    }
    if (value(x, 4) > best4) {
      best4 = value(x, 4);
      f.argmax_quartic = x;
    }
  }
  f.square_below_5 = best2 < 25;
  f.quartic_below_328 = best4 < 328 * 328;
  return f;
}

SpiderH1tReport spider_vs_h1t_report(const RegularizationResult& r, std::size_t t,
                                     const Rational& c) {
  if (t == 0) throw Error(ErrorKind::invalid_argument, "t must be at least 1");
  SpiderH1tReport rep;
  rep.t = t;
  const Graph& gp = r.g_prime.graph;
  rep.h1t = gp.has_bipartition() && gp.m() > 0 ? count_h1t(gp, t).copies : BigInt(0);
  rep.spiders = count_spiders(gp, t);
  if (rep.spiders > 0) rep.ratio = Rational(rep.h1t, rep.spiders);
  // E^{t+1} >= 2^{27(t+1)} C t! n^{2t+1}.
  const Rational lhs(power(BigInt(r.host_edges), t + 1));
  const Rational rhs = Rational(power(BigInt(2), 27 * (t + 1))) * c * Rational(factorial(t)) *
                       Rational(power(BigInt(r.host_order), 2 * t + 1));
  rep.hypothesis_met = r.host_edges > 0 && lhs >= rhs;
  rep.bound_holds = Rational(rep.h1t) >= c * Rational(rep.spiders);
  return rep;
}

const char* to_string(Weight w) { return w == Weight::heavy ? "heavy" : "light"; }

std::vector<MatchingWeightClass> classify_heavy_light(const Graph& g, std::size_t t,
                                                      std::size_t max_matchings) {
  require_sides(g);
  if (t == 0) throw Error(ErrorKind::invalid_argument, "t must be at least 1");
  const auto& edges = g.edges();
  std::vector<MatchingWeightClass> out;
  std::vector<Edge> m(t);
  for_each_matching(edges, g.n(), t, [&](std::span<const std::uint32_t> idx) {
    if (out.size() >= max_matchings) {
      throw Error(ErrorKind::cap_exceeded, "t-matching count exceeds the cap");
    }
    for (std::size_t k = 0; k < t; ++k) m[k] = edges[idx[k]];
    MatchingWeightClass w;
    w.matching = TMatching(m);
    w.link_edges = edges_inside(g, link_mask(g, m));
    w.label = w.link_edges > 4 * t * t ? Weight::heavy : Weight::light;
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

ClaimReport claim_bounds_check(const Graph& g, std::size_t t, std::size_t max_matchings) {
  require_sides(g);
  if (t < 2) throw Error(ErrorKind::precondition, "claim checks need t >= 2");
  if (count_hst(g, t, t) != 0) throw Error(ErrorKind::precondition, "input contains H_{t,t}");

  std::map<std::vector<Edge>, Weight> label;
  for (auto& w : classify_heavy_light(g, t, max_matchings)) {
    label.emplace(std::vector<Edge>(w.matching.edges().begin(), w.matching.edges().end()), w.label);
  }

  ClaimReport rep;
  rep.t = t;
  const auto& edges = g.edges();
  const BigInt tfact = factorial(t);
  const BigInt t2fact = factorial(t - 2);
  std::vector<Edge> anchor(t - 1), n(t);
  for_each_matching(edges, g.n(), t - 1, [&](std::span<const std::uint32_t> idx) {
    for (std::size_t k = 0; k + 1 < t; ++k) anchor[k] = edges[idx[k]];
    const VertexSet mask = link_mask(g, anchor);
    std::vector<Edge> local;
    for (const Edge& e : edges) {
      if (mask.test(e.u) && mask.test(e.v)) local.push_back(e);
    }
    const BigInt em = local.size();
    const BigInt vm = mask.count();
    std::size_t heavy = 0, light = 0;
    for_each_matching(local, g.n(), t, [&](std::span<const std::uint32_t> li) {
      for (std::size_t k = 0; k < t; ++k) n[k] = local[li[k]];
      std::vector<Edge> key = n;
      std::sort(key.begin(), key.end());
      (label.at(key) == Weight::heavy ? heavy : light) += 1;
      return true;
    });
    ++rep.anchors;
    std::string name;
    for (const Edge& e : anchor) {
      name += (name.empty() ? "" : "+") + std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    // heavy <= (t-1)/(t-2)! E'^{t-1} V'
    if (BigInt(heavy) * t2fact > BigInt(t - 1) * power(em, t - 1) * vm) {
      ++rep.claim1_violations;
      rep.counterexamples.push_back("claim1 at " + name);
    }
    if (em > BigInt(4 * t * t * t) * vm) {
      ++rep.good_anchors;
      // light >= E'^t / (4 t!)
      if (BigInt(light) * 4 * tfact < power(em, t)) {
        ++rep.claim2_violations;
        rep.counterexamples.push_back("claim2 at " + name);
      }
    }
    return true;
  });
  return rep;
}

}  // namespace dn
