#include "cdfree/io.hpp"

#include <algorithm>
#include <sstream>

namespace cdfree {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

Edge parse_edge_line(const std::string& line, int lineno, int n) {
  std::istringstream in(line);
  std::string tag;
  int u = 0, v = 0;
  std::string rest;
  if (!(in >> tag >> u >> v) || tag != "e" || (in >> rest))
    throw ParseError(lineno, "malformed edge line: '" + line + "'");
  if (u < 1 || u > n || v < 1 || v > n)
    throw ParseError(lineno, "edge endpoint out of range [1.." +
                                 std::to_string(n) + "]");
  if (u == v) throw ParseError(lineno, "self-loop");
  return Edge(u - 1, v - 1);
}

}  // namespace

Graph parse_instance(const std::string& text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  int lineno = 0;
  int n = -1, m = -1;
  for (; i < lines.size(); ++i) {
    lineno = static_cast<int>(i) + 1;
    const std::string& line = lines[i];
    if (blank(line) || line[0] == 'c') continue;
    std::istringstream in(line);
    std::string tag, fmt, rest;
    if (!(in >> tag >> fmt >> n >> m) || tag != "p" || fmt != "edge" ||
        (in >> rest) || n < 0 || m < 0)
      throw ParseError(lineno, "malformed header: '" + line + "'");
    ++i;
    break;
  }
  if (n < 0) throw ParseError(lineno + 1, "missing 'p edge' header");

  Graph g(n);
  int seen = 0;
  for (; i < lines.size(); ++i) {
    lineno = static_cast<int>(i) + 1;
    const std::string& line = lines[i];
    if (blank(line) || line[0] == 'c') continue;
    const Edge e = parse_edge_line(line, lineno, n);
    if (g.has_edge(e.u, e.v)) throw ParseError(lineno, "duplicate edge");
    g.add_edge(e.u, e.v);
    ++seen;
  }
  if (seen != m)
    throw ParseError(lineno, "header declares " + std::to_string(m) +
                                 " edges, found " + std::to_string(seen));
  return g;
}

std::string render_instance(const Graph& g,
                            const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

EdgeSet parse_deletion_set(const std::string& text, int n) {
  const auto lines = split_lines(text);
  EdgeSet f;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (blank(line) || line[0] == 'c') continue;
    const Edge e = parse_edge_line(line, static_cast<int>(i) + 1, n);
    if (!f.insert(e))
      throw ParseError(static_cast<int>(i) + 1, "duplicate edge");
  }
  return f;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
  CDFREE_REQUIRE(n > 0, "empty range");
  return next() % n;
}

std::string generate(const GeneratorSpec& spec) {
  SplitMix64 rng(spec.seed);

  if (spec.kind == GeneratorSpec::Kind::Random) {
    CDFREE_REQUIRE(spec.n >= 0, "negative vertex count");
    CDFREE_REQUIRE(spec.p >= 0.0 && spec.p <= 1.0,
                   "edge probability outside [0,1]");
    Graph g(spec.n);
    for (int u = 0; u < spec.n; ++u)
      for (int v = u + 1; v < spec.n; ++v)
        if (rng.next_double() < spec.p) g.add_edge(u, v);
    return render_instance(g);
  }

  // planted: disjoint cliques (free by construction) plus injected edges
  int n = 0;
  for (int s : spec.clique_sizes) {
    CDFREE_REQUIRE(s >= 1, "clique size must be positive");
    n += s;
  }
  Graph g(n);
  int base = 0;
  for (int s : spec.clique_sizes) {
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) g.add_edge(base + i, base + j);
    base += s;
  }

  std::vector<Edge> non_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
  CDFREE_REQUIRE(spec.planted_edges >= 0 &&
                     spec.planted_edges <= static_cast<int>(non_edges.size()),
                 "planted edge count exceeds available non-edges");

  // partial Fisher-Yates for the planted sample
  std::vector<Edge> planted;
  for (int i = 0; i < spec.planted_edges; ++i) {
    const auto j =
        i + static_cast<std::size_t>(rng.next_below(non_edges.size() - i));
    std::swap(non_edges[i], non_edges[j]);
    planted.push_back(non_edges[i]);
  }
  std::sort(planted.begin(), planted.end());
  for (const Edge& e : planted) g.add_edge(e.u, e.v);

  std::vector<std::string> comments;
  for (const Edge& e : planted) {
    std::ostringstream c;
    c << "planted e " << e.u + 1 << ' ' << e.v + 1;
    comments.push_back(c.str());
  }
  return render_instance(g, comments);
}

}  // namespace cdfree
