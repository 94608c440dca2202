#include "cdfree/graph.hpp"

#include <algorithm>
#include <numeric>

namespace cdfree {

bool EdgeSet::insert(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSet::subset_of(const EdgeSet& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(),
                       edges_.begin(), edges_.end());
}

Graph::Graph(int n) : n_(n), m_(0) {
  CDFREE_REQUIRE(n >= 0, "vertex count must be nonnegative");
  adj_.assign(n, boost::dynamic_bitset<>(n));
}

void Graph::check_vertex(int v) const {
  CDFREE_REQUIRE(v >= 0 && v < n_, "vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  CDFREE_REQUIRE(u != v, "self-loops are not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  CDFREE_REQUIRE(u != v && adj_[u].test(v), "edge not present");
  adj_[u].reset(v);
  adj_[v].reset(u);
  --m_;
}

const boost::dynamic_bitset<>& Graph::adjacency_row(int v) const {
  check_vertex(v);
  return adj_[v];
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  VertexSet out;
  for (auto u = adj_[v].find_first(); u != boost::dynamic_bitset<>::npos;
       u = adj_[v].find_next(u))
    out.push_back(static_cast<int>(u));
  return out;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].count());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (auto v = adj_[u].find_next(u); v != boost::dynamic_bitset<>::npos;
         v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph delete_edges(const Graph& g, const EdgeSet& f) {
  Graph out = g;
  for (const Edge& e : f) out.remove_edge(e.u, e.v);
  return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    CDFREE_REQUIRE(v >= 0 && v < g.n(), "induced vertex out of range");
  Graph sub(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.has_edge(sorted[i], sorted[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(sub), std::move(sorted)};
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  CDFREE_REQUIRE(static_cast<int>(perm.size()) == g.n(),
                 "permutation size mismatch");
  Graph out(g.n());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  CDFREE_REQUIRE(g1.n() <= kIsoMaxVertices && g2.n() <= kIsoMaxVertices,
                 "isomorphism check limited to small graphs");
  if (g1.n() != g2.n() || g1.m() != g2.m()) return false;
  const int n = g1.n();

  std::vector<int> deg1(n), deg2(n);
  for (int v = 0; v < n; ++v) {
    deg1[v] = g1.degree(v);
    deg2[v] = g2.degree(v);
  }
  {
    auto s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (deg1[v] != deg2[perm[v]]) ok = false;
    if (!ok) continue;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g1.has_edge(u, v) != g2.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace cdfree
