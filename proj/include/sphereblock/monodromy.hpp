#pragma once

#include "sphereblock/pairdata.hpp"

namespace sphereblock {

// The partition of X*(C) under the generated equivalence ~, with canonical
// representatives (lexicographically least residue tuple per class) and the
// (-1) involution on classes.
struct MonodromyClassTable {
  std::vector<Vec> chars;                // copy of the character list
  std::vector<std::vector<int>> classes; // partition blocks, each sorted;
                                         // blocks ordered by smallest member
  std::vector<int> class_of_char;        // char index -> class id
  std::vector<Vec> representatives;      // lex-least residue tuple per class
  std::vector<int> neg_map;              // involution on class ids
  bool dot_ddot_differ = false;          // diagnostic: did dot and ddot
                                         // generate different partitions?
};

// c1 ~ c2 as written: some w in W0 relates fixed lifts modulo
// K_full + w K_full, under dot or ddot.
bool related(const PairInvariants& inv, const Vec& c1, const Vec& c2);

// Transitive closure of ~ over all of X*(C).  Parallel production kernel.
MonodromyClassTable class_table(const PairInvariants& inv);

// Literal reference implementation: pairwise related() plus closure.
// Kept for testing and benchmarking against the parallel kernel.
MonodromyClassTable class_table_serial(const PairInvariants& inv);

int class_of(const MonodromyClassTable& table, const Vec& c);

}  // namespace sphereblock
