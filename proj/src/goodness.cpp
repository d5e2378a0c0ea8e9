#include "dn/goodness.hpp"

#include "dn/combinatorics.hpp"
#include "dn/counting.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace dn {
namespace {

std::uint32_t parse_id(std::string_view tok, const std::string& whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::parse, "malformed structure '" + whole + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

void check_edge_cap(std::size_t count, const AuxCaps& caps) {
  if (count > caps.max_edges) {
    throw Error(ErrorKind::cap_exceeded, "auxiliary graph exceeds the edge cap of " +
                                             std::to_string(caps.max_edges));
  }
}

}  // namespace

const char* to_string(AuxKind k) {
  return k == AuxKind::biclique_aux ? "biclique_aux" : "htt_aux";
}

std::vector<Vertex> AuxGraph::host_vertices(std::size_t idx) const {
  if (kind_ == AuxKind::biclique_aux) return {items_[idx].begin(), items_[idx].end()};
  std::vector<Vertex> out;
  for (std::uint32_t id : items_[idx]) {
    out.push_back(host_edges_[id].u);
    out.push_back(host_edges_[id].v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TSet AuxGraph::tset(std::size_t idx) const {
  if (kind_ != AuxKind::biclique_aux) throw Error(ErrorKind::invalid_argument, "not a t-set aux");
  return TSet({items_[idx].begin(), items_[idx].end()});
}

TMatching AuxGraph::matching(std::size_t idx) const {
  if (kind_ != AuxKind::htt_aux) throw Error(ErrorKind::invalid_argument, "not a matching aux");
  std::vector<Edge> e;
  for (std::uint32_t id : items_[idx]) e.push_back(host_edges_[id]);
  return TMatching(std::move(e));
}

std::optional<std::size_t> AuxGraph::find_tset(std::span<const Vertex> members) const {
  if (kind_ != AuxKind::biclique_aux) return std::nullopt;
  return find_matching(members);  // same lexicographic lookup over items_
}

std::optional<std::size_t> AuxGraph::find_matching(std::span<const std::uint32_t> key) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), key, [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  if (it == items_.end() || !std::equal(it->begin(), it->end(), key.begin(), key.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - items_.begin());
}

std::string AuxGraph::encode(std::size_t idx) const {
  std::string out;
  for (std::uint32_t x : items_[idx]) {
    if (!out.empty()) out += '+';
    if (kind_ == AuxKind::biclique_aux) {
      out += std::to_string(x);
    } else {
      out += std::to_string(host_edges_[x].u) + '-' + std::to_string(host_edges_[x].v);
    }
  }
  return out;
}

std::size_t AuxGraph::decode(const std::string& text) const {
  std::vector<std::uint32_t> key;
  for (std::string_view part : split(text, '+')) {
    if (kind_ == AuxKind::biclique_aux) {
      key.push_back(parse_id(part, text));
      continue;
    }
    auto ends = split(part, '-');
    if (ends.size() != 2) throw Error(ErrorKind::parse, "malformed structure '" + text + "'");
    const Edge e(parse_id(ends[0], text), parse_id(ends[1], text));
    auto it = std::lower_bound(host_edges_.begin(), host_edges_.end(), e);
    if (it == host_edges_.end() || !(*it == e)) {
      throw Error(ErrorKind::parse, "structure '" + text + "' names a non-edge");
    }
    key.push_back(static_cast<std::uint32_t>(it - host_edges_.begin()));
  }
  std::sort(key.begin(), key.end());
  auto idx = find_matching(key);
  if (!idx) throw Error(ErrorKind::parse, "structure '" + text + "' is not an aux vertex");
  return *idx;
}

AuxGraph build_aux(const Graph& g, std::size_t t, AuxKind kind, const AuxCaps& caps) {
  if (t == 0) throw Error(ErrorKind::invalid_argument, "t must be at least 1");
  AuxGraph aux;
  aux.kind_ = kind;
  aux.t_ = t;
  aux.host_n_ = g.n();
  std::vector<Edge> edges;

  if (kind == AuxKind::biclique_aux) {
    const std::size_t n = g.n();
    if (t <= n && binomial(n, t) > caps.max_vertices) {
      throw Error(ErrorKind::cap_exceeded, "C(n,t) exceeds the aux vertex cap");
    }
    for_each_combination(n, t, [&](std::span<const std::uint32_t> idx) {
      aux.items_.emplace_back(idx.begin(), idx.end());
      return true;
    });
    const CombinationRanker ranker(n, t);
    std::vector<std::uint32_t> other(t);
    for (std::size_t s = 0; s < aux.items_.size(); ++s) {
      const std::vector<Vertex> common =
          common_neighborhood(g, std::span<const Vertex>(aux.items_[s]));
      for_each_combination(common.size(), t, [&](std::span<const std::uint32_t> idx) {
        for (std::size_t k = 0; k < t; ++k) other[k] = common[idx[k]];
        const std::uint64_t r = ranker.rank(other);
        if (r > s) edges.emplace_back(static_cast<Vertex>(s), static_cast<Vertex>(r));
        return true;
      });
      check_edge_cap(edges.size(), caps);
    }
  } else {
    if (!g.has_bipartition()) {
      throw Error(ErrorKind::missing_bipartition, "htt_aux needs a bipartite host with sides");
    }
    aux.host_edges_ = g.edges();
    const auto& host = aux.host_edges_;
    for_each_matching(host, g.n(), t, [&](std::span<const std::uint32_t> idx) {
      if (aux.items_.size() >= caps.max_vertices) {
        throw Error(ErrorKind::cap_exceeded, "t-matching count exceeds the aux vertex cap");
      }
      aux.items_.emplace_back(idx.begin(), idx.end());
      return true;
    });
    std::vector<Edge> anchor(t);
    std::vector<Edge> local;
    std::vector<std::uint32_t> local_ids, key(t);
    for (std::size_t m = 0; m < aux.items_.size(); ++m) {
      for (std::size_t k = 0; k < t; ++k) anchor[k] = host[aux.items_[m][k]];
      const VertexSet mask = link_mask(g, anchor);
      local.clear();
      local_ids.clear();
      for (std::uint32_t id = 0; id < host.size(); ++id) {
        if (mask.test(host[id].u) && mask.test(host[id].v)) {
          local.push_back(host[id]);
          local_ids.push_back(id);
        }
      }
      for_each_matching(local, g.n(), t, [&](std::span<const std::uint32_t> idx) {
        for (std::size_t k = 0; k < t; ++k) key[k] = local_ids[idx[k]];
        const std::size_t other = *aux.find_matching(key);
        if (other > m) edges.emplace_back(static_cast<Vertex>(m), static_cast<Vertex>(other));
        return true;
      });
      check_edge_cap(edges.size(), caps);
    }
  }
  aux.graph_ = Graph(aux.items_.size(), std::move(edges));
  return aux;
}

std::vector<std::size_t> GoodnessTable::good_set(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (good(v, i)) out.push_back(v);
  }
  return out;
}

GoodnessTable classify_goodness(const Graph& g, std::size_t h) {
  if (h == 0) throw Error(ErrorKind::invalid_argument, "h must be at least 1");
  const std::size_t n = g.n();
  const BigInt twice_e = 2 * BigInt(g.m());
  const BigInt pow3 = power(BigInt(3), h);
  GoodnessTable table;
  table.h = h;
  table.average_degree = n == 0 ? Rational(0) : Rational(twice_e, BigInt(n));
  table.degree_threshold = table.average_degree / Rational(pow3);
  table.levels.assign(h, std::vector<std::uint8_t>(n, 0));

  // d(v) >= 2e / (n 3^h), cross-multiplied.
  for (Vertex v = 0; v < n; ++v) {
    table.levels[0][v] = BigInt(g.degree(v)) * n * pow3 >= twice_e;
  }
  for (std::size_t i = 2; i <= h; ++i) {
    const auto& prev = table.levels[i - 2];
    auto& cur = table.levels[i - 1];
    for (Vertex v = 0; v < n; ++v) {
      if (!table.levels[0][v]) continue;
      std::size_t good_nb = 0;
      for (Vertex u : g.neighbors(v)) good_nb += prev[u];
      cur[v] = 2 * good_nb >= g.degree(v);
    }
  }
  for (std::size_t i = 1; i <= h; ++i) {
    BigInt s = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!table.levels[i - 1][v]) s += g.degree(v);
    }
    table.bad_degree_sums.emplace_back(s);
  }
  return table;
}

void write_goodness_csv(std::ostream& out, const GoodnessTable& table,
                        const std::function<std::string(std::size_t)>& label) {
  out << "vertex_index,structure_members";
  for (std::size_t i = 1; i <= table.h; ++i) out << ",good_" << i;
  out << '\n';
  for (std::size_t v = 0; v < table.size(); ++v) {
    out << v << ',' << (label ? label(v) : std::to_string(v));
    for (std::size_t i = 1; i <= table.h; ++i) out << ',' << (table.good(v, i) ? 1 : 0);
    out << '\n';
  }
}

GoodStructures good_structures(const Graph& g, std::size_t t, std::size_t h, std::size_t i,
                               AuxKind kind, const AuxCaps& caps) {
  if (i > h) throw Error(ErrorKind::invalid_argument, "level i must not exceed h");
  GoodStructures out{build_aux(g, t, kind, caps), {}, {}};
  out.table = classify_goodness(out.aux.graph(), h);
  out.indices = out.table.good_set(i);
  return out;
}

MassCheck goodness_mass_check(const Graph& g, std::size_t h) {
  return goodness_mass_check(g, classify_goodness(g, h));
}

MassCheck goodness_mass_check(const Graph& g, const GoodnessTable& table) {
  const std::size_t h = table.h;
  MassCheck c;
  c.edges = Rational(g.m());
  c.bad_sum = table.bad_degree_sums.back();
  c.good_sum = 2 * c.edges - c.bad_sum;
  c.bad_ok = 3 * c.bad_sum <= 2 * c.edges;
  c.good_ok = 3 * c.good_sum >= 4 * c.edges;
  c.levels_ok = true;
  for (std::size_t i = 1; i <= h; ++i) {
    const Rational limit = 2 * c.edges / Rational(power(BigInt(3), h - i + 1));
    c.levels_ok = c.levels_ok && table.bad_degree_sums[i - 1] <= limit;
  }
  c.nesting_ok = true;
  for (std::size_t i = 2; i <= h; ++i) {
    for (std::size_t v = 0; v < table.size(); ++v) {
      if (table.good(v, i) && !table.good(v, i - 1)) c.nesting_ok = false;
    }
  }
  return c;
}

}  // namespace dn
