#include "dn/extraction.hpp"

#include "dn/combinatorics.hpp"
#include "dn/counting.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace dn {
namespace {

std::string next_data_line(std::istream& in, std::size_t& line_no, bool required) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line;
  }
  if (required) throw ParseError(line_no, "unexpected end of input");
  return {};
}

std::optional<std::vector<std::size_t>> cover_side(const Graph& g,
                                                   std::span<const std::vector<Vertex>> parents,
                                                   std::span<const std::size_t> candidates,
                                                   bool side_a, std::size_t t) {
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> owner;
  std::set<std::vector<Vertex>> seen;
  for (std::size_t i : candidates) {
    std::vector<Vertex> part;
    for (Vertex x : parents[i]) {
      if (g.in_side_a(x) == side_a) part.push_back(x);
    }
    if (seen.insert(part).second) {
      parts.push_back(std::move(part));
      owner.push_back(i);
    }
  }
  const SpanningSelection s = spanning_selection(parts, 3 * t);
  if (!s.reached) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t k : s.chosen) out.push_back(owner[k]);
  return out;
}

}  // namespace

std::vector<std::size_t> BfsTree::path_to(std::size_t x) const {
  if (!contains(x)) throw Error(ErrorKind::invalid_argument, "vertex not in tree");
  std::vector<std::size_t> path{x};
  while (path.back() != root) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

std::size_t closest_common_ancestor(const BfsTree& tree, std::span<const std::size_t> leaves) {
  if (leaves.empty()) throw Error(ErrorKind::invalid_argument, "no leaves given");
  std::vector<std::size_t> common = tree.path_to(leaves.front());
  for (std::size_t leaf : leaves.subspan(1)) {
    const std::vector<std::size_t> p = tree.path_to(leaf);
    std::size_t k = 0;
    while (k < common.size() && k < p.size() && common[k] == p[k]) ++k;
    common.resize(k);
  }
  return common.back();
}

std::vector<std::size_t> select_collision_leaves(const Graph& g,
                                                 std::span<const std::vector<Vertex>> parents,
                                                 std::size_t t, SplitMode mode) {
  if (t == 0) throw Error(ErrorKind::invalid_argument, "t must be at least 1");
  if (mode == SplitMode::even) {
    std::set<std::vector<Vertex>> distinct(parents.begin(), parents.end());
    if (distinct.size() < t + 1) {
      throw Error(ErrorKind::insufficient_parents, "fewer than t+1 distinct parent t-sets");
    }
    std::vector<std::vector<Vertex>> unique;
    std::vector<std::size_t> owner;
    std::set<std::vector<Vertex>> seen;
    for (std::size_t i = 0; i < parents.size(); ++i) {
      if (seen.insert(parents[i]).second) {
        unique.push_back(parents[i]);
        owner.push_back(i);
      }
    }
    const SpanningSelection s = spanning_selection(unique, 2 * t);
    if (!s.reached) {
      throw Error(ErrorKind::no_qualifying_selection, "parent t-sets cover fewer than 2t vertices");
    }
    std::vector<std::size_t> chosen;
    for (std::size_t k : s.chosen) chosen.push_back(owner[k]);
    // Pad with further distinct parents only.
    for (std::size_t k = 0; k < owner.size() && chosen.size() < t + 1; ++k) {
      if (std::find(chosen.begin(), chosen.end(), owner[k]) == chosen.end()) {
        chosen.push_back(owner[k]);
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  if (!g.has_bipartition()) {
    throw Error(ErrorKind::missing_bipartition, "odd leaf selection needs sides");
  }
  // Distinct matchings may share a vertex set, so only the count is checked.
  if (parents.size() < 2 * t + 1) {
    throw Error(ErrorKind::insufficient_parents, "fewer than 2t+1 parent matchings");
  }
  // One representative per distinct (A-part, B-part) pair.
  std::vector<std::size_t> reps;
  {
    std::set<std::vector<Vertex>> seen;
    for (std::size_t i = 0; i < parents.size(); ++i) {
      if (seen.insert(parents[i]).second) reps.push_back(i);
    }
  }
  for (bool side_a : {true, false}) {
    if (auto chosen = cover_side(g, parents, reps, side_a, t)) {
      for (std::size_t i = 0; i < parents.size() && chosen->size() < 2 * t + 1; ++i) {
        if (std::find(chosen->begin(), chosen->end(), i) == chosen->end()) chosen->push_back(i);
      }
      std::sort(chosen->begin(), chosen->end());
      return *chosen;
    }
  }
  throw Error(ErrorKind::no_qualifying_selection, "neither side of the parents covers 3t vertices");
}

std::uint64_t default_collision_threshold(SplitMode mode, std::size_t t) {
  if (mode == SplitMode::even) {
    const BigInt c = binomial(2 * t, t);
    return c > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(c);
  }
  const long double base = std::ceil(std::pow(3.0L * std::exp(1.0L), 2.0L * t));
  const long double value = static_cast<long double>(factorial(t)) * base;
  if (!(value < 1.8e19L)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(value);
}

std::vector<Vertex> encoding_vertices(const std::string& code) {
  std::vector<Vertex> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= code.size(); ++k) {
    if (k == code.size() || code[k] == '+' || code[k] == '-') {
      const std::string tok = code.substr(start, k - start);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::parse, "malformed structure '" + code + "'");
      }
      out.push_back(static_cast<Vertex>(std::stoul(tok)));
      start = k + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> witness_layers(const Certificate& c) {
  if (c.arcs.empty()) return {};
  std::map<std::string, std::vector<std::string>> children;
  std::set<std::string> nodes, has_parent;
  for (const WitnessArc& a : c.arcs) {
    children[a.parent].push_back(a.child);
    nodes.insert(a.parent);
    nodes.insert(a.child);
    has_parent.insert(a.child);
  }
  std::vector<std::string> roots;
  for (const auto& x : nodes) {
    if (!has_parent.count(x)) roots.push_back(x);
  }
  if (roots.size() != 1) throw Error(ErrorKind::invalid_argument, "witness must have one root");
  std::map<std::string, std::size_t> depth{{roots[0], 0}};
  std::vector<std::vector<std::string>> layers{{roots[0]}};
  for (std::size_t d = 0; d < layers.size(); ++d) {
    const std::vector<std::string> current = layers[d];
    for (const std::string& x : current) {
      for (const std::string& y : children[x]) {
        auto [it, fresh] = depth.emplace(y, d + 1);
        if (fresh) {
          if (layers.size() == d + 1) layers.emplace_back();
          layers[d + 1].push_back(y);
        } else if (it->second != d + 1) {
          throw Error(ErrorKind::invalid_argument, "witness arcs skip layers");
        }
      }
    }
  }
  return layers;
}

CertifyReport certify(const Graph& g, const Certificate& c) {
  CertifyReport rep;
  std::set<Vertex> vs(c.vertices.begin(), c.vertices.end());
  rep.in_range = !vs.empty() && *vs.rbegin() < g.n();
  if (!rep.in_range) return rep;
  const std::vector<Vertex> w(vs.begin(), vs.end());
  const InducedSubgraph sub = induced_subgraph(g, w);
  const DegreeStats st = degree_stats(sub.graph);
  rep.order = sub.graph.n();
  rep.min_degree = st.min_degree;
  rep.avg_degree = st.avg_degree;
  rep.radius = st.radius;
  const std::size_t t = c.t, r = c.r;
  if (c.mode == SplitMode::even) {
    rep.degree_ok = rep.min_degree >= 2 * t;
    rep.radius_ok = rep.radius.at_most(r);
    rep.order_ok = rep.order < r * t * t + r * t;
  } else {
    rep.degree_ok = rep.avg_degree >= Rational(2 * t + 1);
    rep.radius_ok = rep.radius.at_most(r + 1);
    rep.order_ok = rep.order <= r * (4 * t * t + 2 * t);
  }

  rep.witness_ok = true;
  rep.layers_disjoint = true;
  if (!c.arcs.empty()) {
    try {
      const auto layers = witness_layers(c);
      std::set<Vertex> named;
      std::vector<std::set<Vertex>> per_layer;
      for (const auto& layer : layers) {
        std::set<Vertex> here;
        for (const std::string& code : layer) {
          for (Vertex x : encoding_vertices(code)) here.insert(x);
        }
        for (const auto& earlier : per_layer) {
          for (Vertex x : here) rep.layers_disjoint = rep.layers_disjoint && !earlier.count(x);
        }
        named.insert(here.begin(), here.end());
        per_layer.push_back(std::move(here));
      }
      rep.witness_ok = named == vs;
    } catch (const Error&) {
      rep.witness_ok = false;
      rep.layers_disjoint = false;
    }
  }
  return rep;
}

void write_certificate(std::ostream& out, const Certificate& c) {
  out << "# order=" << c.order << " min_degree=" << c.min_degree
      << " avg_degree=" << to_string(c.avg_degree) << " radius=" << c.radius << '\n';
  out << to_string(c.mode) << ' ' << c.t << ' ' << c.r << '\n';
  for (std::size_t k = 0; k < c.vertices.size(); ++k) out << (k ? " " : "") << c.vertices[k];
  out << '\n';
  for (const WitnessArc& a : c.arcs) out << a.parent << ' ' << a.child << '\n';
}

Certificate load_certificate(std::istream& in) {
  std::size_t line_no = 0;
  Certificate c;
  {
    std::istringstream hdr(next_data_line(in, line_no, true));
    std::string mode;
    if (!(hdr >> mode >> c.t >> c.r)) throw ParseError(line_no, "header must be 'mode t r'");
    try {
      c.mode = parse_split_mode(mode);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  {
    std::istringstream ids(next_data_line(in, line_no, true));
    std::string tok;
    while (ids >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line_no, "bad vertex id '" + tok + "'");
      }
      c.vertices.push_back(static_cast<Vertex>(std::stoul(tok)));
    }
    std::sort(c.vertices.begin(), c.vertices.end());
  }
  for (std::string line; !(line = next_data_line(in, line_no, false)).empty();) {
    std::istringstream row(line);
    WitnessArc a;
    std::string extra;
    if (!(row >> a.parent >> a.child) || (row >> extra)) {
      throw ParseError(line_no, "arc lines must be 'parent child'");
    }
    c.arcs.push_back(std::move(a));
  }
  return c;
}

const char* to_string(ExtractionFailure f) {
  switch (f) {
    case ExtractionFailure::no_top_good_structure: return "no_top_good_structure";
    case ExtractionFailure::split_failed: return "split_failed";
    case ExtractionFailure::case2_exhausted: return "case2_exhausted";
    case ExtractionFailure::caps_exceeded: return "caps_exceeded";
  }
  return "unknown";
}

namespace {

Certificate measured(const Graph& g, Certificate c) {
  const InducedSubgraph sub = induced_subgraph(g, c.vertices);
  const DegreeStats st = degree_stats(sub.graph);
  c.order = sub.graph.n();
  c.min_degree = st.min_degree;
  c.avg_degree = st.avg_degree;
  c.radius = st.radius;
  return c;
}

ExtractionOutcome fail(ExtractionOutcome out, ExtractionFailure f, std::string detail) {
  out.failure = f;
  out.detail = std::move(detail);
  return out;
}

std::optional<Certificate> short_circuit(const Graph& g, const ExtractOptions& opt) {
  const std::size_t q = 2 * opt.t * opt.t + 3 * opt.t + 1;
  const auto found = find_biclique(g, opt.t + 1, q);
  if (!found) return std::nullopt;
  Certificate c;
  c.mode = SplitMode::odd;
  c.t = opt.t;
  c.r = opt.r;
  c.vertices = found->first;
  c.vertices.insert(c.vertices.end(), found->second.begin(), found->second.end());
  std::sort(c.vertices.begin(), c.vertices.end());
  c = measured(g, std::move(c));
  if (!certify(g, c).passes()) return std::nullopt;
  return c;
}

}  // namespace

ExtractionOutcome extract(const Graph& g, const ExtractOptions& opt) {
  const std::size_t t = opt.t, r = opt.r;
  const bool even = opt.mode == SplitMode::even;
  if (r == 0) throw Error(ErrorKind::precondition, "r must be at least 1");
  if (t < (even ? 2u : 1u)) {
    throw Error(ErrorKind::precondition, even ? "even mode needs t >= 2" : "odd mode needs t >= 1");
  }
  ExtractionOutcome out;
  out.stats.threshold = opt.collision_threshold.value_or(default_collision_threshold(opt.mode, t));
  if (out.stats.threshold == 0) throw Error(ErrorKind::invalid_argument, "collision threshold must be positive");

  if (!even) {
    if (auto c = short_circuit(g, opt)) {
      out.stats.short_circuit = true;
      out.certificate = std::move(*c);
      return out;
    }
  }
  const Graph host = even ? g : bipartite_half(g, opt.seed);

  std::optional<AuxGraph> aux;
  try {
    aux = build_aux(host, t, even ? AuxKind::biclique_aux : AuxKind::htt_aux, opt.caps);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::cap_exceeded) throw;
    return fail(std::move(out), ExtractionFailure::caps_exceeded, e.what());
  }
  const GoodnessTable table = classify_goodness(aux->graph(), r);
  bool any_top = false;
  for (std::size_t s = 0; s < aux->size() && !any_top; ++s) {
    any_top = table.good(s, r) && aux->graph().degree(static_cast<Vertex>(s)) > 0;
  }
  if (!any_top) {
    return fail(std::move(out), ExtractionFailure::no_top_good_structure,
                "auxiliary graph has no (r,r)-good structure with a neighbor");
  }

  SplitOutcome split = split_with_retries(host, *aux, table, r, opt.theta, opt.mode,
                                          opt.max_split_attempts, opt.seed);
  out.stats.split_attempts = split.attempts.size();
  if (!split.success) {
    out.partition = split.partition;
    return fail(std::move(out), ExtractionFailure::split_failed,
                "no passing partition in " + std::to_string(split.attempts.size()) + " attempts");
  }
  Partition part = *split.partition;
  const std::size_t root = *split.validation->monochromatic_top;
  part.swap_colors(part.color_of[aux->host_vertices(root).front()], 1);
  const SplitValidation v = validate_split(host, *aux, table, part, opt.theta, opt.mode);
  out.partition = part;

  BfsTree tree;
  tree.root = root;
  tree.layers.push_back({root});
  tree.depth[root] = 0;
  std::size_t rejected = 0;
  out.stats.layer_sizes.push_back(1);
  out.stats.max_in_count.push_back(0);

  for (std::size_t i = 1; i <= r; ++i) {
    std::vector<std::size_t> prev = tree.layers[i - 1];
    std::sort(prev.begin(), prev.end());
    tree.layers.emplace_back();
    std::unordered_map<std::size_t, std::vector<std::size_t>> in_arcs;
    std::size_t max_in = 0;
    for (std::size_t x : prev) {
      const FamilyRecord* rec = v.find(x, r - (i - 1), static_cast<std::uint32_t>(i));
      if (!rec) continue;
      for (std::size_t y : rec->family) {
        auto& ins = in_arcs[y];
        ins.push_back(x);
        max_in = std::max(max_in, ins.size());
        if (ins.size() == 1) {
          tree.parent[y] = x;
          tree.depth[y] = i;
          tree.layers[i].push_back(y);
        }
        if (ins.size() < out.stats.threshold) continue;

        std::vector<std::vector<Vertex>> parent_sets;
        for (std::size_t p : ins) parent_sets.push_back(aux->host_vertices(p));
        std::vector<std::size_t> picked;
        try {
          picked = select_collision_leaves(host, parent_sets, t, opt.mode);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::insufficient_parents &&
              e.kind() != ErrorKind::no_qualifying_selection) {
            throw;
          }
          continue;
        }
        std::vector<std::size_t> leaves;
        for (std::size_t k : picked) leaves.push_back(ins[k]);
        const std::size_t cca = closest_common_ancestor(tree, leaves);

        Certificate c;
        c.mode = opt.mode;
        c.t = t;
        c.r = r;
        std::set<std::size_t> nodes{y};
        std::set<std::pair<std::size_t, std::size_t>> arcs;
        for (std::size_t leaf : leaves) {
          const auto path = tree.path_to(leaf);
          const auto from = std::find(path.begin(), path.end(), cca);
          for (auto it = from; it != path.end(); ++it) {
            nodes.insert(*it);
            if (it + 1 != path.end()) arcs.emplace(*it, *(it + 1));
          }
          arcs.emplace(leaf, y);
        }
        std::set<Vertex> vs;
        for (std::size_t node : nodes) {
          for (Vertex h : aux->host_vertices(node)) vs.insert(h);
        }
        c.vertices.assign(vs.begin(), vs.end());
        for (const auto& [a, b] : arcs) c.arcs.push_back({aux->encode(a), aux->encode(b)});
        c = measured(g, std::move(c));
        if (!certify(g, c).passes()) {
          ++rejected;
          continue;
        }
        out.stats.layer_sizes.push_back(tree.layers[i].size());
        out.stats.max_in_count.push_back(max_in);
        out.stats.collision_layer = i;
        out.stats.collision_multiplicity = ins.size();
        out.certificate = std::move(c);
        return out;
      }
    }
    out.stats.layer_sizes.push_back(tree.layers[i].size());
    out.stats.max_in_count.push_back(max_in);
    if (tree.layers[i].empty()) break;
  }
  std::string detail = "no collision reached the threshold " + std::to_string(out.stats.threshold);
  if (rejected) detail += "; " + std::to_string(rejected) + " assembled witnesses failed certify";
  return fail(std::move(out), ExtractionFailure::case2_exhausted, detail);
}

}  // namespace dn
