#pragma once

#include <vector>

#include "cdfree/graph.hpp"

namespace cdfree {

inline constexpr int kFminMaxVertices = 8;

// All inclusion-minimal deletion sets of host, ordered by size then
// lexicographically. For a free host the family is { {} }.
struct MinimalDeletionFamily {
  Graph host;
  std::vector<EdgeSet> sets;
};

MinimalDeletionFamily minimal_deletion_sets(const Graph& h);

// Family of the subgraph induced by `vertices`, with every edge set
// expressed in g's vertex ids.
std::vector<EdgeSet> minimal_deletion_sets_in_host(const Graph& g,
                                                   const VertexSet& vertices);

}  // namespace cdfree
