#include "dn/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace dn {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++number_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      tokens.clear();
      std::size_t i = 0;
      while (i < line_.size()) {
        while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line_.size() && line_[j] != ' ' && line_[j] != '\t') ++j;
        if (j > i) tokens.emplace_back(line_.data() + i, j - i);
        i = j;
      }
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return number_; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

std::uint64_t parse_number(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Reads one graph block; returns false if the stream held no further block.
bool read_block(LineReader& reader, Graph& out) {
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) return false;
  if (tok.size() != 2) throw ParseError(reader.line(), "header must be 'n m'");
  const std::uint64_t n = parse_number(tok[0], reader.line());
  const std::uint64_t m = parse_number(tok[1], reader.line());
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(reader.line(), "n too large");

  std::optional<std::vector<std::uint8_t>> sides;
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  std::uint64_t read = 0;
  bool first = true;
  while (read < m) {
    if (!reader.next(tok)) {
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(read));
    }
    if (first && tok.size() == 2 && tok[0] == "bipartition") {
      first = false;
      const std::uint64_t a = parse_number(tok[1], reader.line());
      if (a > n) throw ParseError(reader.line(), "bipartition size exceeds n");
      sides.emplace(n, 0);
      for (std::uint64_t v = 0; v < a; ++v) (*sides)[v] = 1;
      continue;
    }
    first = false;
    if (tok.size() != 2) throw ParseError(reader.line(), "edge line must be 'u v'");
    const std::uint64_t u = parse_number(tok[0], reader.line());
    const std::uint64_t v = parse_number(tok[1], reader.line());
    if (u == v) throw ParseError(reader.line(), "self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) {
      throw ParseError(reader.line(), "vertex id out of range for n=" + std::to_string(n));
    }
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) {
      throw ParseError(reader.line(),
                       "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
    ++read;
  }
  // With m == 0 a bipartition line is not consumed here; load_graph picks it up.
  try {
    out = Graph(n, std::move(edges), std::move(sides));
  } catch (const Error& e) {
    throw ParseError(reader.line(), e.what());
  }
  return true;
}

}  // namespace

Graph load_graph(std::istream& in) {
  LineReader reader(in);
  Graph g;
  if (!read_block(reader, g)) throw ParseError(reader.line(), "empty input");
  std::vector<std::string_view> tok;
  if (reader.next(tok)) {
    if (g.m() == 0 && !g.has_bipartition() && tok.size() == 2 && tok[0] == "bipartition") {
      const std::uint64_t a = parse_number(tok[1], reader.line());
      if (a > g.n()) throw ParseError(reader.line(), "bipartition size exceeds n");
      std::vector<std::uint8_t> sides(g.n(), 0);
      for (std::uint64_t v = 0; v < a; ++v) sides[v] = 1;
      g = g.with_bipartition(std::move(sides));
      if (!reader.next(tok)) return g;
    }
    throw ParseError(reader.line(), "unexpected trailing data");
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return load_graph(in);
}

std::vector<Graph> load_graphs(std::istream& in) {
  LineReader reader(in);
  std::vector<Graph> out;
  Graph g;
  while (read_block(reader, g)) out.push_back(std::move(g));
  return out;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  if (g.has_bipartition()) {
    auto a = g.prefix_side_size();
    if (!a) {
      throw Error(ErrorKind::invalid_argument,
                  "bipartition is not in prefix form; relabel before writing");
    }
    out << "bipartition " << *a << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

InducedSubgraph prefix_relabel(const Graph& g) {
  if (!g.has_bipartition()) return {g, {}};
  std::vector<Vertex> order = g.side_a();
  const std::size_t a = order.size();
  for (Vertex v : g.side_b()) order.push_back(v);
  std::vector<Vertex> pos(g.n());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<Vertex>(k);
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
  std::vector<std::uint8_t> sides(g.n(), 0);
  for (std::size_t k = 0; k < a; ++k) sides[k] = 1;
  return {Graph(g.n(), std::move(edges), std::move(sides)), std::move(order)};
}

}  // namespace dn
