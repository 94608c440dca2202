#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdfree {

[[noreturn]] inline void contract_violation(const std::string& msg) {
  throw std::logic_error(msg);
}

#define CDFREE_REQUIRE(cond, msg) \
  do {                            \
    if (!(cond)) ::cdfree::contract_violation(msg); \
  } while (0)

// Unordered vertex pair, stored with u < v.
struct Edge {
  int u;
  int v;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    CDFREE_REQUIRE(a != b, "edge endpoints must differ");
  }
  auto operator<=>(const Edge&) const = default;
};

// Set of edges kept as a sorted unique vector.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> es) {
    for (const Edge& e : es) insert(e);
  }

  // Returns false if the edge was already present.
  bool insert(Edge e);
  bool contains(Edge e) const;
  bool subset_of(const EdgeSet& other) const;

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& edges() const { return edges_; }

  auto operator<=>(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

using VertexSet = std::vector<int>;  // sorted, distinct

// Simple undirected graph on vertices 0..n-1, adjacency as per-vertex bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int m() const { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const boost::dynamic_bitset<>& adjacency_row(int v) const;
  VertexSet neighbors(int v) const;
  int degree(int v) const;
  std::vector<Edge> edges() const;  // sorted

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<boost::dynamic_bitset<>> adj_;
};

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

// G - F. Rejects edges absent from g.
Graph delete_edges(const Graph& g, const EdgeSet& f);

// Induced subgraph with local ids 0..|s|-1; to_host maps local -> original.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;
};
InducedSubgraph induced(const Graph& g, const VertexSet& s);

// Graph with vertex i relabeled to perm[i].
Graph permute(const Graph& g, const std::vector<int>& perm);

// Brute force over vertex bijections, usable up to this many vertices.
inline constexpr int kIsoMaxVertices = 10;
bool are_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace cdfree
