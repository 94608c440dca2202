#include "cdfree/solver.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>
#include <thread>

#include "cdfree/fmin.hpp"

namespace cdfree {
namespace {

bool twin_guard(const Graph& g, const DiamondWitness& w) {
  auto na = g.adjacency_row(w.a);
  auto nc = g.adjacency_row(w.c);
  na.reset(w.c);
  nc.reset(w.a);
  return na == nc;
}

bool one_sided(const Graph& g, const DiamondWitness& w, int v) {
  if (v == w.a || v == w.c) return false;
  return g.has_edge(v, w.a) != g.has_edge(v, w.c);
}

// One-sided vertices must touch b or d, otherwise {a,b,d,v} (or {c,b,d,v})
// would induce a claw and Rule 3 would have fired.
void check_witness_context(const Graph& g, const DiamondWitness& w, int v) {
  CDFREE_REQUIRE(g.has_edge(v, w.b) || g.has_edge(v, w.d),
                 "one-sided vertex adjacent to neither b nor d");
}

}  // namespace

std::vector<EdgeSet> rule_claw(const Graph& g, const ClawWitness& w) {
  CDFREE_REQUIRE(is_valid_claw(g, w), "invalid claw witness");
  std::vector<EdgeSet> branches;
  for (int leaf : w.leaves) branches.push_back({Edge(w.center, leaf)});
  return branches;
}

std::vector<EdgeSet> rule_twins(const Graph& g, const DiamondWitness& w) {
  CDFREE_REQUIRE(is_valid_diamond(g, w), "invalid diamond witness");
  CDFREE_REQUIRE(twin_guard(g, w), "twin guard does not hold");
  return {{Edge(w.a, w.c)}, {Edge(w.a, w.b)}, {Edge(w.a, w.d)}};
}

std::vector<int> find_one_sided_vertices(const Graph& g,
                                         const DiamondWitness& w) {
  CDFREE_REQUIRE(is_valid_diamond(g, w), "invalid diamond witness");
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (one_sided(g, w, v)) out.push_back(v);
  return out;
}

std::vector<EdgeSet> rule_two_witnesses(const Graph& g,
                                        const DiamondWitness& w, int s,
                                        int t) {
  CDFREE_REQUIRE(is_valid_diamond(g, w), "invalid diamond witness");
  CDFREE_REQUIRE(s != t && one_sided(g, w, s) && one_sided(g, w, t),
                 "s,t must be distinct one-sided vertices");
  CDFREE_REQUIRE(g.has_edge(t, w.a), "t must be adjacent to a");
  check_witness_context(g, w, s);
  check_witness_context(g, w, t);
  return minimal_deletion_sets_in_host(g, {w.a, w.b, w.c, w.d, s, t});
}

std::vector<EdgeSet> rule_single_witness(const Graph& g,
                                         const DiamondWitness& w, int t) {
  CDFREE_REQUIRE(is_valid_diamond(g, w), "invalid diamond witness");
  CDFREE_REQUIRE(one_sided(g, w, t), "t must be one-sided");
  CDFREE_REQUIRE(g.has_edge(t, w.a) && g.has_edge(t, w.b),
                 "labels must be normalized so t ~ a and t ~ b");

  std::vector<EdgeSet> family =
      minimal_deletion_sets_in_host(g, {w.a, w.b, w.c, w.d, t});

  std::vector<EdgeSet> excluded;
  excluded.push_back({Edge(w.a, t), Edge(w.c, w.d)});
  if (g.has_edge(t, w.d)) excluded.push_back({Edge(w.a, t), Edge(w.c, w.b)});

  for (const EdgeSet& ex : excluded) {
    auto it = std::find(family.begin(), family.end(), ex);
    CDFREE_REQUIRE(it != family.end(),
                   "excluded set missing from the minimal deletion family");
    family.erase(it);
  }
  return family;
}

BranchStep dispatch(const Graph& g, int k) {
  if (k < 0) return {1, {}, {}};

  if (auto claw = find_claw(g)) {
    const ClawWitness& w = *claw;
    return {3,
            {w.center, w.leaves[0], w.leaves[1], w.leaves[2]},
            rule_claw(g, w)};
  }

  auto dia = find_diamond(g);
  if (!dia) return {2, {}, {}};
  DiamondWitness w = *dia;

  if (twin_guard(g, w)) return {4, {w.a, w.b, w.c, w.d}, rule_twins(g, w)};

  std::vector<int> sided = find_one_sided_vertices(g, w);
  CDFREE_REQUIRE(!sided.empty(), "twin guard failed yet no one-sided vertex");
  const int t = sided[0];
  if (!g.has_edge(t, w.a)) std::swap(w.a, w.c);
  check_witness_context(g, w, t);

  if (sided.size() >= 2) {
    const int s = sided[1];
    return {5,
            {w.a, w.b, w.c, w.d, t, s},
            rule_two_witnesses(g, w, s, t)};
  }

  if (!g.has_edge(t, w.b)) std::swap(w.b, w.d);
  CDFREE_REQUIRE(g.has_edge(t, w.b), "t adjacent to neither b nor d");
  const int rule = g.has_edge(t, w.d) ? 7 : 6;
  return {rule, {w.a, w.b, w.c, w.d, t}, rule_single_witness(g, w, t)};
}

namespace {

SolveOutcome solve_rec(const Graph& g, int k, SolveStats& stats,
                       RuleTrace* trace) {
  ++stats.nodes;
  BranchStep step = dispatch(g, k);
  if (step.rule == 1) return {false, {}};
  if (step.rule == 2) {
    if (trace) trace->insert(trace->begin(), {2, {}, {}});
    return {true, {}};
  }
  for (const EdgeSet& f : step.branches) {
    SolveOutcome child = solve_rec(delete_edges(g, f),
                                   k - static_cast<int>(f.size()), stats, trace);
    if (child.yes) {
      EdgeSet cert = f;
      for (const Edge& e : child.certificate) cert.insert(e);
      if (trace) trace->insert(trace->begin(), {step.rule, step.labels, f});
      return {true, cert};
    }
  }
  return {false, {}};
}

}  // namespace

SolveOutcome solve(const Instance& inst, SolveStats* stats, RuleTrace* trace) {
  SolveStats local;
  if (trace) trace->clear();
  SolveOutcome out = solve_rec(inst.g, inst.k, stats ? *stats : local, trace);
  if (out.yes)
    CDFREE_REQUIRE(check_certificate(inst.g, out.certificate, inst.k),
                   "solver produced an invalid certificate");
  return out;
}

namespace {

struct ParallelCtx {
  std::atomic<bool> found{false};
  std::atomic<int> tasks{0};
  int max_tasks = 0;
};

SolveOutcome par_rec(const Graph& g, int k, ParallelCtx& ctx, int depth) {
  if (ctx.found.load(std::memory_order_relaxed)) return {false, {}};
  BranchStep step = dispatch(g, k);
  if (step.rule == 1) return {false, {}};
  if (step.rule == 2) {
    ctx.found.store(true, std::memory_order_relaxed);
    return {true, {}};
  }

  const bool spawn = depth < 4 && step.branches.size() > 1 &&
                     ctx.tasks.load(std::memory_order_relaxed) < ctx.max_tasks;
  if (spawn) {
    std::vector<std::future<SolveOutcome>> futures;
    futures.reserve(step.branches.size());
    for (const EdgeSet& f : step.branches) {
      ctx.tasks.fetch_add(1, std::memory_order_relaxed);
      futures.push_back(std::async(std::launch::async, [&g, &ctx, f, k,
                                                        depth]() {
        SolveOutcome r = par_rec(delete_edges(g, f),
                                 k - static_cast<int>(f.size()), ctx, depth + 1);
        ctx.tasks.fetch_sub(1, std::memory_order_relaxed);
        return r;
      }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
      SolveOutcome child = futures[i].get();
      if (child.yes) {
        EdgeSet cert = step.branches[i];
        for (const Edge& e : child.certificate) cert.insert(e);
        return {true, cert};
      }
    }
    return {false, {}};
  }

  for (const EdgeSet& f : step.branches) {
    SolveOutcome child =
        par_rec(delete_edges(g, f), k - static_cast<int>(f.size()), ctx,
                depth + 1);
    if (child.yes) {
      EdgeSet cert = f;
      for (const Edge& e : child.certificate) cert.insert(e);
      return {true, cert};
    }
  }
  return {false, {}};
}

}  // namespace

SolveOutcome solve_parallel(const Instance& inst) {
  ParallelCtx ctx;
  ctx.max_tasks =
      static_cast<int>(std::max(2u, std::thread::hardware_concurrency())) * 4;
  SolveOutcome out = par_rec(inst.g, inst.k, ctx, 0);
  if (out.yes)
    CDFREE_REQUIRE(check_certificate(inst.g, out.certificate, inst.k),
                   "solver produced an invalid certificate");
  return out;
}

namespace {

SolveOutcome baseline_rec(const Graph& g, int k, SolveStats& stats) {
  ++stats.nodes;
  if (k < 0) return {false, {}};

  std::vector<Edge> branch_edges;
  if (auto claw = find_claw(g)) {
    for (int leaf : claw->leaves) branch_edges.emplace_back(claw->center, leaf);
  } else if (auto dia = find_diamond(g)) {
    branch_edges = {Edge(dia->a, dia->b), Edge(dia->a, dia->c),
                    Edge(dia->a, dia->d), Edge(dia->c, dia->b),
                    Edge(dia->c, dia->d)};
  } else {
    return {true, {}};
  }
  std::sort(branch_edges.begin(), branch_edges.end());

  for (const Edge& e : branch_edges) {
    SolveOutcome child = baseline_rec(delete_edges(g, {e}), k - 1, stats);
    if (child.yes) {
      EdgeSet cert = child.certificate;
      cert.insert(e);
      return {true, cert};
    }
  }
  return {false, {}};
}

}  // namespace

SolveOutcome baseline_solve(const Instance& inst, SolveStats* stats) {
  SolveStats local;
  SolveOutcome out = baseline_rec(inst.g, inst.k, stats ? *stats : local);
  if (out.yes)
    CDFREE_REQUIRE(check_certificate(inst.g, out.certificate, inst.k),
                   "baseline produced an invalid certificate");
  return out;
}

SolveOutcome oracle_solve(const Instance& inst) {
  const std::vector<Edge> edges = inst.g.edges();
  const int m = static_cast<int>(edges.size());
  const int kmax = std::min(inst.k, m);

  long long budget = 0;
  {
    long long binom = 1;
    for (int s = 0; s <= kmax; ++s) {
      budget += binom;
      if (budget > kOracleBudget)
        throw std::runtime_error("oracle combinatorial budget exceeded");
      binom = binom * (m - s) / (s + 1);
    }
  }

  for (int size = 0; size <= kmax; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      EdgeSet f;
      for (int i : idx) f.insert(edges[i]);
      if (is_free(delete_edges(inst.g, f))) return {true, f};
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {false, {}};
}

bool check_certificate(const Graph& g, const EdgeSet& f, int k) {
  if (static_cast<int>(f.size()) > k) return false;
  for (const Edge& e : f)
    if (e.v >= g.n() || !g.has_edge(e.u, e.v)) return false;
  return is_free(delete_edges(g, f));
}

}  // namespace cdfree
