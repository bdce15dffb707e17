#pragma once

#include "sphereblock/lattice.hpp"
#include "sphereblock/rootdata.hpp"

#include <optional>
#include <string>

namespace sphereblock {

enum class BuiltinFamily { sl_so, psl_pso, pgl_po };

BuiltinFamily family_from_string(const std::string& s);
std::string to_string(BuiltinFamily f);

// A root datum plus the involution's action on X*(T).  The optional
// parabolic subset feeds the <=_L order; the optional little-Weyl words are
// a user-supplied subgroup used only for a containment sanity check.
struct PairDatum {
  RootDatum datum;
  Mat theta_star;
  std::string label;
  std::optional<std::vector<int>> parabolic_subset;  // 0-based simple indices
  std::optional<std::vector<std::vector<int>>> little_weyl_words;
};

// Derived lattice-theoretic invariants of the pair:
//   K_full = X*(T/T_[H])   = im(1 - theta*),
//   K_circ = X*(T/T°_[H])  = saturation(K_full),
//   C_group = X*(C) = K_circ/K_full (always finite),
//   W0 = { w : w K_circ = K_circ and w rho - rho in K_circ }.
struct PairInvariants {
  RootDatum datum;  // copy of the pair's root datum, for self-contained use
  Sublattice K_full;
  Sublattice K_circ;
  QuotientGroup C_group;  // presented in the basis coordinates of K_circ
  WeylGroup W;
  std::vector<int> W0;                       // element indices into W
  std::optional<std::vector<int>> W_little;  // user-supplied, if any

  std::vector<Vec> C_chars;  // residue tuples, deterministic order
  std::vector<Vec> C_lifts;  // one lift in X*(T) per character

  int char_index(const Vec& residues) const;  // -1 if unknown
  Vec neg_char(const Vec& residues) const;
};

PairDatum builtin_pair(BuiltinFamily family, int n);

PairInvariants derive_invariants(const PairDatum& pair);

// The restriction map r: K_circ -> X*(C), as a residue tuple.
// Throws ConfigError when lam is not in K_circ (r is only defined there).
Vec restrict_to_C(const PairInvariants& inv, const Vec& lam);

// Image of a sublattice under a Weyl matrix, re-canonicalized.
Sublattice transform(const Mat& w, const Sublattice& l);

}  // namespace sphereblock
