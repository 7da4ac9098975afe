#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gpretzel/diagram.hpp"

namespace gpretzel {

/// Seeded draws that do not depend on the standard library's distribution
/// implementations, so sampled cases are the same on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, bound); bound > 0.
  int below(int bound);
  /// Integer in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Closure of a random braid on 1..4 strands with at most `max_crossings`
/// letters. Oriented.
Diagram random_braid_diagram(Sampler& s, int max_crossings);

struct MoveRecord {
  Move move = Move::R1Plus;
  Diagram before;
  Diagram after;
};

/// Applies one random applicable Reidemeister move. Undo moves are preferred
/// once the diagram has more than `soft_limit` crossings.
MoveRecord random_move(const Diagram& d, Sampler& s, int soft_limit = 12);

struct NamedDiagram {
  std::string name;
  Diagram diagram;
};

/// Every "*.pd" file in a directory (sorted by name); one diagram per file.
std::vector<NamedDiagram> load_corpus(const std::string& directory);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 3;
  std::uint64_t seed = 1;
  int workers = 1;
  int oracle_limit = 14;
  int random_diagrams = 500;
  int random_moves = 200;
  int mirror_cases = 100;
  std::vector<NamedDiagram> corpus;
};

/// The family, subclass, symmetry and oracle checks, one result per check.
std::vector<CheckResult> verify_paper(const VerifyOptions& opt);

}  // namespace gpretzel
