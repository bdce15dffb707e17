#pragma once

#include "sphereblock/blocks.hpp"

namespace sphereblock {

struct CheckResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The seven falsifiable release checks.  max_n caps every n-sweep (the full
// documented run uses max_n = 8); lower caps give quick subset runs.
std::vector<CheckResult> run_acceptance(int max_n = 8);

bool all_passed(const std::vector<CheckResult>& rs);

// Independent oracle for the monodromy partition: enumerate explicit lifts
// of every character of X*(C) in a coefficient window over the basis of
// K_full, relate two characters when some w in W0 maps one windowed lift
// exactly onto another (under dot or ddot), and return the connected
// components.  No lattice membership tests are involved, so this checks
// class_table by a genuinely different route.
std::vector<std::vector<int>> oracle_partition(const PairInvariants& inv,
                                               int window = 3);

// Negative-control hook: when the environment variable SPHEREBLOCK_FAULT is
// set to "flip_edge_type", the em_type of the first edge is flipped between
// U and N, so the structural re-validation must fail.  A no-op otherwise.
void maybe_inject_fault(OrbitGraph& g);

}  // namespace sphereblock
