#pragma once

#include "sphereblock/pairdata.hpp"

#include <json.hpp>

#include <string>

namespace sphereblock {

enum class EmType { G, U, T, N };

EmType em_type_from_string(const std::string& s);
std::string to_string(EmType t);

// One B-orbit: its twisted-involution action tau* on X*(T), the derived
// character lattices, the stabilizer component group and the W(Y)
// candidate words.
struct OrbitNode {
  std::string id;
  Mat tau_star;
  int dim = 0;
  Sublattice XY;        // X*(Y): saturation of im(1 - tau*)
  Sublattice XY_full;   // im(1 - tau*) itself (lift coset lattice)
  QuotientGroup A_Y;    // coker(1 - tau*); its torsion part is the
                        // stabilizer component group
  std::vector<Vec> chars;  // torsion characters of A_Y
  std::vector<int> wy;     // WY_words: candidate element indices, sorted
};

struct OrbitEdge {
  int lower = 0, upper = 0;  // node indices; dim(upper) = dim(lower) + 1
  int alpha = 0;             // 0-based simple-root index
  EmType em_type = EmType::U;
};

struct OrbitGraph {
  std::vector<OrbitNode> orbits;  // sorted by (dim desc, id)
  std::vector<OrbitEdge> edges;   // sorted by (lower id, alpha, upper id)
  int open_orbit = -1;
  int dim_gh = 0;

  int index_of(const std::string& id) const;  // -1 if absent
};

// Built-in generator for the A I family: one node per involution of S_n,
// tau* = -(permutation action), Richardson-Springer raising moves as edges.
OrbitGraph generate_AI_orbits(const PairDatum& pair, const PairInvariants& inv,
                              int n);

// Generic loader: schema
//   { "orbits": [ {"id", "tau_star": [[...]], "dim"} ],
//     "edges":  [ {"lower","upper","alpha","em_type"} ] }
// with 1-based "alpha".  All node/edge invariants are re-validated;
// violations raise ConfigError naming the offending item.
OrbitGraph load_orbits(const nlohmann::ordered_json& doc, const PairDatum& pair,
                       const PairInvariants& inv);

nlohmann::ordered_json orbit_graph_to_json(const OrbitGraph& g);

// Re-checks every structural invariant (dims, involutions, unique open
// orbit, edge lattice conditions per em_type, candidate lengths) and
// returns one message per violation.  Empty result = graph is sound.
// Both the generator and the loader run this before returning a graph.
std::vector<std::string> validate_graph(const OrbitGraph& g,
                                        const PairDatum& pair,
                                        const PairInvariants& inv);

// W(Y) candidates of one orbit (already computed on the node).
const std::vector<int>& wY_candidates(const OrbitGraph& g,
                                      const std::string& orbit_id);

// DOT export; node_class (optional, per node index) colors orbits.
std::string to_dot(const OrbitGraph& g, const PairInvariants& inv,
                   const std::vector<int>* node_class = nullptr);

}  // namespace sphereblock
