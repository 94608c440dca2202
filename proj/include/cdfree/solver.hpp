#pragma once

#include <cstdint>
#include <vector>

#include "cdfree/detect.hpp"
#include "cdfree/graph.hpp"

namespace cdfree {

struct Instance {
  Graph g;
  int k = 0;
};

struct SolveOutcome {
  bool yes = false;
  EdgeSet certificate;  // meaningful iff yes
};

struct TraceRecord {
  int rule = 0;                // 1..7
  std::vector<int> labels;     // claw: center,leaves; diamond rules: a,b,c,d[,t[,s]]
  EdgeSet branch;              // branch taken (empty for terminal rules)
};
using RuleTrace = std::vector<TraceRecord>;

struct SolveStats {
  long long nodes = 0;
};

// One dispatch step: the first applicable rule and its branch sets.
struct BranchStep {
  int rule = 0;
  std::vector<int> labels;
  std::vector<EdgeSet> branches;  // empty for rules 1 and 2
};
BranchStep dispatch(const Graph& g, int k);

// Branch sets of the individual rules; dispatch() composes these.
std::vector<EdgeSet> rule_claw(const Graph& g, const ClawWitness& w);
std::vector<EdgeSet> rule_twins(const Graph& g, const DiamondWitness& w);
std::vector<int> find_one_sided_vertices(const Graph& g,
                                         const DiamondWitness& w);
std::vector<EdgeSet> rule_two_witnesses(const Graph& g,
                                        const DiamondWitness& w, int s, int t);
std::vector<EdgeSet> rule_single_witness(const Graph& g,
                                         const DiamondWitness& w, int t);

// The branching algorithm. On YES the certificate is a valid deletion set of
// size at most inst.k. Sequential search is deterministic; trace (optional)
// records the rule path to the accepting leaf.
SolveOutcome solve(const Instance& inst, SolveStats* stats = nullptr,
                   RuleTrace* trace = nullptr);

// Sibling branches explored concurrently, first YES wins; the certificate is
// valid but not necessarily the sequential one.
SolveOutcome solve_parallel(const Instance& inst);

// Branch on every edge of any found claw or diamond (branching number 5).
SolveOutcome baseline_solve(const Instance& inst, SolveStats* stats = nullptr);

// Exhaustive ground truth: all edge subsets of size <= k in increasing size.
inline constexpr long long kOracleBudget = 10'000'000;
SolveOutcome oracle_solve(const Instance& inst);

bool check_certificate(const Graph& g, const EdgeSet& f, int k);

}  // namespace cdfree
