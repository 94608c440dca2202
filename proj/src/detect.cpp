#include "cdfree/detect.hpp"

namespace cdfree {

bool is_valid_claw(const Graph& g, const ClawWitness& w) {
  const auto& [x, y, z] = w.leaves;
  if (x == y || y == z || x == w.center || y == w.center || z == w.center)
    return false;
  return g.has_edge(w.center, x) && g.has_edge(w.center, y) &&
         g.has_edge(w.center, z) && !g.has_edge(x, y) && !g.has_edge(x, z) &&
         !g.has_edge(y, z);
}

bool is_valid_diamond(const Graph& g, const DiamondWitness& w) {
  return g.has_edge(w.a, w.b) && g.has_edge(w.a, w.c) && g.has_edge(w.a, w.d) &&
         g.has_edge(w.b, w.c) && g.has_edge(w.c, w.d) && !g.has_edge(w.b, w.d);
}

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    const VertexSet nb = g.neighbors(v);
    const int deg = static_cast<int>(nb.size());
    if (deg < 3) continue;
    // lexicographically first independent triple in N(v)
    for (int i = 0; i < deg; ++i)
      for (int j = i + 1; j < deg; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (int l = j + 1; l < deg; ++l) {
          if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
          ClawWitness w{v, {nb[i], nb[j], nb[l]}};
          CDFREE_REQUIRE(is_valid_claw(g, w), "claw witness invariant");
          return w;
        }
      }
  }
  return std::nullopt;
}

std::optional<DiamondWitness> find_diamond(const Graph& g) {
  for (int a = 0; a < g.n(); ++a) {
    for (auto cu = g.adjacency_row(a).find_next(a);
         cu != boost::dynamic_bitset<>::npos;
         cu = g.adjacency_row(a).find_next(cu)) {
      const int c = static_cast<int>(cu);
      auto common = g.adjacency_row(a) & g.adjacency_row(c);
      for (auto bu = common.find_first(); bu != boost::dynamic_bitset<>::npos;
           bu = common.find_next(bu)) {
        const int b = static_cast<int>(bu);
        for (auto du = common.find_next(bu);
             du != boost::dynamic_bitset<>::npos; du = common.find_next(du)) {
          const int d = static_cast<int>(du);
          if (g.has_edge(b, d)) continue;
          DiamondWitness w{a, b, c, d};
          CDFREE_REQUIRE(is_valid_diamond(g, w), "diamond witness invariant");
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_free(const Graph& g) {
  return !find_claw(g).has_value() && !find_diamond(g).has_value();
}

}  // namespace cdfree
