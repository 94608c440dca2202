#pragma once

#include <string>
#include <vector>

#include "cdfree/fmin.hpp"
#include "cdfree/graph.hpp"

namespace cdfree {

// Multiset of branch costs, each >= 1.
using BranchingVector = std::vector<int>;

// The unique x >= 1 with sum_i x^(-cost_i) = 1, to 1e-9 by bisection.
double branching_number(const BranchingVector& v);

// One configuration of the six-vertex host around the diamond a,b,c,d with
// the two one-sided witnesses t (~a) and s.
struct CaseReport {
  Graph host;                // labels a=0,b=1,c=2,d=3,t=4,s=5
  std::vector<int> t_profile;  // N(t) cap {b,d}
  std::vector<int> s_profile;  // N(s) cap {a,b,c,d}
  bool st_edge = false;
  MinimalDeletionFamily family;
  BranchingVector vector;
  double number = 0.0;
};

// The 18 host configurations of the two-witness rule.
std::vector<CaseReport> enumerate_rule5_cases();

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Recomputes every rule-level branching vector and number and checks the
// stated bounds; the global maximum must be the (1,1,1,2,2) value < 3.562.
std::vector<ClaimResult> verify_paper_claims();

}  // namespace cdfree
