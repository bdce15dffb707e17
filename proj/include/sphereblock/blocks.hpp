#pragma once

#include "sphereblock/monodromy.hpp"
#include "sphereblock/orbitgraph.hpp"

namespace sphereblock {

// One irreducible equivariant object: an orbit plus a character of its
// stabilizer component group, with the engine's chosen weight lift.
struct IrreducibleLabel {
  std::string orbit_id;
  Vec chi;   // residue tuple over the torsion factors of A_Y
  Vec lift;  // weight in X*(T), lying in X*(Y)
};

struct BlockReport {
  std::size_t num_classes = 0;
  std::vector<std::vector<IrreducibleLabel>> blocks;  // indexed by class id
  std::vector<std::size_t> totals;                    // per class id
  std::size_t total = 0;                              // grand total
};

// Monodromy class of (orbit, chi): transport the canonical lift through the
// canonical W(Y) word and restrict to C.  The inclusion w^{-1} lift in K_circ
// is a hard guarantee; violation raises InternalError.
int assign_class(const OrbitGraph& g, const PairInvariants& inv,
                 const MonodromyClassTable& table, const std::string& orbit_id,
                 const Vec& chi);

// Same, with explicit candidate element and lift (used by the
// path-independence sweep).
int assign_class_with(const OrbitGraph& g, const PairInvariants& inv,
                      const MonodromyClassTable& table, int orbit_index, int w,
                      const Vec& lift);

BlockReport block_report(const OrbitGraph& g, const PairInvariants& inv,
                         const MonodromyClassTable& table);

struct PathViolation {
  std::string orbit_id;
  Vec chi;
  std::string word;
  Vec lift;
  int got = -1, expected = -1;
};

// Empirical well-definedness sweep: for every orbit, candidate word, and
// lift in a coefficient window over the basis of im(1 - tau*), the assigned
// class must be constant.  Per (orbit, chi, word, window) at most max_lifts
// lifts are tried (full enumeration when the window fits, otherwise a
// deterministic seeded sample).  First violation per context is recorded.
std::vector<PathViolation> check_path_independence(
    const OrbitGraph& g, const PairInvariants& inv,
    const MonodromyClassTable& table, int window = 3,
    std::size_t max_lifts = 100000, unsigned seed = 20240817);

}  // namespace sphereblock
