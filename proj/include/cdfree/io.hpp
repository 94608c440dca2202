#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdfree/graph.hpp"

namespace cdfree {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// DIMACS-flavored: optional "c ..." lines, one "p edge <n> <m>" header,
// exactly m "e <u> <v>" lines, endpoints 1-indexed.
Graph parse_instance(const std::string& text);
std::string render_instance(const Graph& g,
                            const std::vector<std::string>& comments = {});

// Deletion-set file: "e <u> <v>" lines (and "c" comments), 1-indexed.
EdgeSet parse_deletion_set(const std::string& text, int n);

// splitmix64; fixed algorithm so generated fixtures are portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double next_double();                       // [0, 1)
  std::uint64_t next_below(std::uint64_t n);  // [0, n)
 private:
  std::uint64_t state_;
};

struct GeneratorSpec {
  enum class Kind { Random, Planted };
  Kind kind = Kind::Random;
  int n = 0;                     // random
  double p = 0.0;                // random: edge probability
  std::vector<int> clique_sizes; // planted
  int planted_edges = 0;         // planted
  std::uint64_t seed = 0;
};

// Instance file text; identical spec and seed give byte-identical output.
// Planted instances carry the injected edges as "c planted e u v" comments.
std::string generate(const GeneratorSpec& spec);

}  // namespace cdfree
