#include "cdfree/fmin.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>

#include "cdfree/detect.hpp"

namespace cdfree {
namespace {

bool family_order(const EdgeSet& a, const EdgeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.edges() < b.edges();
}

// Adjacency bit key over vertex pairs i<j, with vertex i mapped through perm.
std::uint64_t permuted_key(const Graph& g, const std::vector<int>& perm) {
  const int n = g.n();
  std::uint64_t key = 0;
  for (const Edge& e : g.edges()) {
    int u = perm[e.u], v = perm[e.v];
    if (u > v) std::swap(u, v);
    key |= std::uint64_t{1} << (u * n + v);
  }
  return key;
}

// Minimal key over all relabelings, with the permutation achieving it.
std::pair<std::uint64_t, std::vector<int>> canonical_form(const Graph& g) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = permuted_key(g, perm);
  std::vector<int> best_perm = perm;
  while (std::next_permutation(perm.begin(), perm.end())) {
    const std::uint64_t key = permuted_key(g, perm);
    if (key < best) {
      best = key;
      best_perm = perm;
    }
  }
  return {best, best_perm};
}

// Subsets of E(h) in increasing size, lexicographic within a size; a kept
// set never has a kept subset, which gives inclusion-minimality.
std::vector<EdgeSet> enumerate_family(const Graph& h) {
  const std::vector<Edge> edges = h.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<EdgeSet> kept;
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      EdgeSet f;
      for (int i : idx) f.insert(edges[i]);
      bool dominated = false;
      for (const EdgeSet& k : kept)
        if (k.subset_of(f)) {
          dominated = true;
          break;
        }
      if (!dominated && is_free(delete_edges(h, f))) kept.push_back(f);
      // next combination
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      if (size == 0) break;
    }
    if (size == 0 && !kept.empty()) break;  // free host: family is { {} }
  }

  // re-verify minimality: restoring any single edge must break freeness
  for (const EdgeSet& f : kept)
    for (const Edge& e : f) {
      EdgeSet smaller;
      for (const Edge& o : f)
        if (!(o == e)) smaller.insert(o);
      CDFREE_REQUIRE(!is_free(delete_edges(h, smaller)),
                     "minimality violated: proper subset is a deletion set");
    }
  std::sort(kept.begin(), kept.end(), family_order);
  return kept;
}

void check_antichain(const std::vector<EdgeSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      CDFREE_REQUIRE(i == j || !sets[i].subset_of(sets[j]),
                     "family is not an antichain");
}

// Families recur for the handful of rule hosts, so memoize. The canonical
// cache is keyed on (n, minimal adjacency bits over all relabelings) and
// stores families in canonical labels; the front cache is keyed on the exact
// labeled bit pattern, since canonicalization itself costs n! key
// evaluations and the branch tree presents the same labeled hosts over and
// over.
std::mutex cache_mutex;
std::map<std::pair<int, std::uint64_t>, std::vector<EdgeSet>> exact_cache;
std::map<std::pair<int, std::uint64_t>, std::vector<EdgeSet>> canon_cache;

std::vector<EdgeSet> family_for(const Graph& h) {
  std::vector<int> identity(h.n());
  std::iota(identity.begin(), identity.end(), 0);
  const std::uint64_t exact_key = permuted_key(h, identity);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = exact_cache.find({h.n(), exact_key});
    if (it != exact_cache.end()) return it->second;
  }

  auto [key, perm] = canonical_form(h);
  std::vector<EdgeSet> canon_sets;
  bool canon_hit = false;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = canon_cache.find({h.n(), key});
    if (it != canon_cache.end()) {
      canon_sets = it->second;
      canon_hit = true;
    }
  }
  if (!canon_hit) canon_sets = enumerate_family(permute(h, perm));

  // map canonical labels back to h's labels
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  std::vector<EdgeSet> sets;
  sets.reserve(canon_sets.size());
  for (const EdgeSet& f : canon_sets) {
    EdgeSet mapped;
    for (const Edge& e : f) mapped.insert(Edge(inv[e.u], inv[e.v]));
    sets.push_back(mapped);
  }
  std::sort(sets.begin(), sets.end(), family_order);

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    canon_cache.insert({{h.n(), key}, canon_sets});
    exact_cache.insert({{h.n(), exact_key}, sets});
  }
  return sets;
}

}  // namespace

MinimalDeletionFamily minimal_deletion_sets(const Graph& h) {
  CDFREE_REQUIRE(h.n() <= kFminMaxVertices, "host too large for fmin");
  std::vector<EdgeSet> sets = family_for(h);
  check_antichain(sets);
  return {h, sets};
}

std::vector<EdgeSet> minimal_deletion_sets_in_host(const Graph& g,
                                                   const VertexSet& vertices) {
  const InducedSubgraph sub = induced(g, vertices);
  MinimalDeletionFamily family = minimal_deletion_sets(sub.graph);
  std::vector<EdgeSet> out;
  out.reserve(family.sets.size());
  for (const EdgeSet& f : family.sets) {
    EdgeSet mapped;
    for (const Edge& e : f)
      mapped.insert(Edge(sub.to_host[e.u], sub.to_host[e.v]));
    out.push_back(mapped);
  }
  std::sort(out.begin(), out.end(), family_order);
  return out;
}

}  // namespace cdfree
