#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cdfree/analysis.hpp"
#include "cdfree/detect.hpp"
#include "cdfree/fmin.hpp"
#include "cdfree/io.hpp"
#include "cdfree/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string edge_set_str(const cdfree::EdgeSet& f) {
  if (f.empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const cdfree::Edge& e : f) {
    if (!first) os << ' ';
    os << e.u + 1 << '-' << e.v + 1;
    first = false;
  }
  return os.str();
}

std::string vector_str(const cdfree::BranchingVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

const char* vertex_letter(int v) {
  static const char* names[] = {"a", "b", "c", "d", "t", "s"};
  return v >= 0 && v < 6 ? names[v] : "?";
}

std::string profile_str(const std::vector<int>& profile) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < profile.size(); ++i)
    os << (i ? "," : "") << vertex_letter(profile[i]);
  os << '}';
  return os.str();
}

int run_solve(const std::string& path, int k, bool use_oracle,
              bool use_baseline, bool parallel, bool dump_trace) {
  const cdfree::Graph g = cdfree::parse_instance(read_file(path));
  cdfree::Instance inst{g, k};
  cdfree::SolveOutcome out;
  cdfree::RuleTrace trace;
  if (use_oracle)
    out = cdfree::oracle_solve(inst);
  else if (use_baseline)
    out = cdfree::baseline_solve(inst);
  else if (parallel)
    out = cdfree::solve_parallel(inst);
  else
    out = cdfree::solve(inst, nullptr, dump_trace ? &trace : nullptr);

  if (!out.yes) {
    std::cout << "NO\n";
    return kExitNo;
  }
  std::cout << "YES\n";
  for (const cdfree::Edge& e : out.certificate)
    std::cout << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  if (dump_trace)
    for (const cdfree::TraceRecord& rec : trace) {
      std::cout << "c trace rule=" << rec.rule << " labels=";
      for (std::size_t i = 0; i < rec.labels.size(); ++i)
        std::cout << (i ? "," : "") << rec.labels[i] + 1;
      std::cout << " branch=" << edge_set_str(rec.branch) << '\n';
    }
  return kExitYes;
}

int run_check(const std::string& graph_path, const std::string& del_path,
              int k) {
  const cdfree::Graph g = cdfree::parse_instance(read_file(graph_path));
  const cdfree::EdgeSet f =
      cdfree::parse_deletion_set(read_file(del_path), g.n());
  if (static_cast<int>(f.size()) > k) {
    std::cout << "FAIL: deletion set has " << f.size() << " edges, budget " << k
              << '\n';
    return kExitNo;
  }
  for (const cdfree::Edge& e : f)
    if (!g.has_edge(e.u, e.v)) {
      std::cout << "FAIL: edge " << e.u + 1 << '-' << e.v + 1
                << " not present in the graph\n";
      return kExitNo;
    }
  if (!cdfree::is_free(cdfree::delete_edges(g, f))) {
    std::cout << "FAIL: residual graph still contains a claw or diamond\n";
    return kExitNo;
  }
  std::cout << "PASS\n";
  return kExitYes;
}

int run_fmin(const std::string& path) {
  const cdfree::Graph g = cdfree::parse_instance(read_file(path));
  const auto family = cdfree::minimal_deletion_sets(g);
  cdfree::BranchingVector vec;
  for (const cdfree::EdgeSet& f : family.sets) {
    std::cout << edge_set_str(f) << '\n';
    vec.push_back(static_cast<int>(f.size()));
  }
  std::cout << "vector: " << vector_str(vec) << '\n';
  return kExitYes;
}

int run_analyze() {
  const auto cases = cdfree::enumerate_rule5_cases();
  for (const cdfree::CaseReport& rep : cases) {
    std::cout << "case t=" << profile_str(rep.t_profile)
              << " s=" << profile_str(rep.s_profile)
              << " st=" << (rep.st_edge ? 1 : 0)
              << " vector=" << vector_str(rep.vector) << " number=";
    std::cout.precision(6);
    std::cout << std::fixed << rep.number << '\n';
  }
  bool all = true;
  for (const cdfree::ClaimResult& claim : cdfree::verify_paper_claims()) {
    std::cout << "claim=" << claim.name << " pass=" << (claim.pass ? 1 : 0)
              << " value=" << claim.detail << '\n';
    all = all && claim.pass;
  }
  return all ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"{claw,diamond}-free edge deletion solver"};
  app.require_subcommand(1);

  std::string file, del_file, out_file, kind = "random";
  int k = 0, gen_n = 10, planted_k = 0;
  double gen_p = 0.3;
  std::uint64_t seed = 0;
  std::vector<int> cliques;
  bool use_oracle = false, use_baseline = false, parallel = false,
       dump_trace = false;

  auto* solve = app.add_subcommand("solve", "decide an instance");
  solve->add_option("file", file, "instance file")->required();
  solve->add_option("-k", k, "deletion budget")->required()
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--oracle", use_oracle, "exhaustive oracle");
  solve->add_flag("--baseline", use_baseline, "5^k baseline");
  solve->add_flag("--parallel", parallel, "parallel branch exploration");
  solve->add_flag("--trace", dump_trace, "dump the accepting rule trace");

  auto* check = app.add_subcommand("check", "verify a deletion set");
  check->add_option("file", file, "instance file")->required();
  check->add_option("deletions", del_file, "deletion-set file")->required();
  check->add_option("-k", k, "deletion budget")->required()
      ->check(CLI::NonNegativeNumber);

  auto* fmin = app.add_subcommand("fmin", "minimal deletion sets of a small graph");
  fmin->add_option("file", file, "instance file (<= 8 vertices)")->required();

  app.add_subcommand("analyze", "branching-number case analysis");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind, "random | planted")
      ->check(CLI::IsMember({"random", "planted"}));
  gen->add_option("-n", gen_n, "vertex count (random)");
  gen->add_option("-p", gen_p, "edge probability (random)");
  gen->add_option("--cliques", cliques, "clique sizes (planted)")->delimiter(',');
  gen->add_option("-k", planted_k, "planted edge count");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o", out_file, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitYes : kExitError;
  }

  try {
    if (solve->parsed())
      return run_solve(file, k, use_oracle, use_baseline, parallel, dump_trace);
    if (check->parsed()) return run_check(file, del_file, k);
    if (fmin->parsed()) return run_fmin(file);
    if (app.get_subcommand("analyze")->parsed()) return run_analyze();
    if (gen->parsed()) {
      cdfree::GeneratorSpec spec;
      spec.kind = kind == "random" ? cdfree::GeneratorSpec::Kind::Random
                                   : cdfree::GeneratorSpec::Kind::Planted;
      spec.n = gen_n;
      spec.p = gen_p;
      spec.clique_sizes = cliques;
      spec.planted_edges = planted_k;
      spec.seed = seed;
      const std::string text = cdfree::generate(spec);
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
        out << text;
      }
      return kExitYes;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
