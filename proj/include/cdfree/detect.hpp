#pragma once

#include <array>
#include <optional>

#include "cdfree/graph.hpp"

namespace cdfree {

// Induced K_{1,3}: center adjacent to three pairwise non-adjacent leaves.
struct ClawWitness {
  int center;
  std::array<int, 3> leaves;  // sorted ascending
};

// Induced K4 minus one edge. a,c are the adjacent degree-3 pair inside the
// witness; b,d are the non-adjacent pair. All of ab,ac,ad,bc,cd are edges.
struct DiamondWitness {
  int a;
  int b;
  int c;
  int d;
};

bool is_valid_claw(const Graph& g, const ClawWitness& w);
bool is_valid_diamond(const Graph& g, const DiamondWitness& w);

// Lexicographically first witness under (center, sorted leaves), or absent.
std::optional<ClawWitness> find_claw(const Graph& g);

// Lexicographically first witness under (a,c,b,d) with a<c, b<d, or absent.
std::optional<DiamondWitness> find_diamond(const Graph& g);

bool is_free(const Graph& g);

}  // namespace cdfree
