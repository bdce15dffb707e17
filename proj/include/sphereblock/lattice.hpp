#pragma once

#include "sphereblock/core.hpp"

#include <optional>

namespace sphereblock {

// Row Hermite normal form: echelon basis with positive pivots, entries above
// each pivot reduced into [0, pivot).  Zero rows are dropped, so the result
// is the canonical basis of the row span.
Mat hermite_normal_form(const Mat& rows);

// A sublattice of Z^ambient, stored by its canonical HNF basis (rows).
struct Sublattice {
  std::size_t ambient = 0;
  Mat basis;  // HNF rows, possibly empty (zero lattice)

  static Sublattice from_rows(std::size_t ambient, const Mat& rows);
  std::size_t rank() const { return basis.size(); }
  bool operator==(const Sublattice& o) const = default;
};

// Smith normal form of an n x m matrix: D = U * M * V with U, V unimodular.
// D is diagonal with d_1 | d_2 | ... >= 0.  Vinv = V^{-1} is maintained so
// quotient lifts do not need a separate inversion.
struct SmithResult {
  Mat D, U, V, Vinv;
  std::vector<Int> diag;   // min(n,m) diagonal entries of D
  std::size_t rank = 0;    // number of nonzero diagonal entries
};
SmithResult smith_normal_form(const Mat& m);

// Membership of v in L; exact echelon forward-substitution.
bool member(const Vec& v, const Sublattice& l);

// Membership of v in L1 + L2 (the sum need not be direct).
bool member_sum(const Vec& v, const Sublattice& l1, const Sublattice& l2);

// Sum of sublattices L1 + L2 as a canonical sublattice.
Sublattice join(const Sublattice& l1, const Sublattice& l2);

// Saturation: {v in Z^n : k*v in L for some k >= 1}.  Same rank as L,
// and the ambient quotient by the result is torsion-free.
Sublattice saturation(const Sublattice& l);

// Integer coordinates of v in the basis of L, if v is a member.
std::optional<Vec> coords_in_basis(const Vec& v, const Sublattice& l);

// The finitely generated abelian group Z^ambient / L, presented through the
// Smith normal form of the basis of L.  Elements are represented by residue
// vectors: one residue per invariant factor (mod d for torsion factors,
// a free integer for factor 0).
struct QuotientGroup {
  std::size_t ambient = 0;
  SmithResult snf;                 // SNF of the defining basis
  std::vector<Int> factors;        // invariant factors: d_i > 1 first, then 0s
  std::vector<std::size_t> positions;  // column of V backing each factor
  std::size_t torsion_count = 0;   // factors[0..torsion_count) are finite

  bool is_finite() const { return torsion_count == factors.size(); }
  Int torsion_order() const;

  // Residues of x modulo L, one per invariant factor.
  Vec project(const Vec& x) const;
  // A representative in Z^ambient with the given residues (free residues may
  // be omitted; they default to 0).  project(lift(r)) == r.
  Vec lift(const Vec& residues) const;
};

QuotientGroup quotient(std::size_t ambient, const Sublattice& l);

// big/small with both given in ambient coordinates; small must be contained
// in big.  The result presents big/small in the basis coordinates of big
// (ambient = rank of big), which keeps it finite whenever ranks agree.
QuotientGroup quotient_pair(const Sublattice& big, const Sublattice& small);

// All elements of the torsion part of Q, as residue tuples over the finite
// factors only (free factors are ignored).  Mixed-radix order: the last
// factor varies fastest.  Identity comes first.
std::vector<Vec> characters(const QuotientGroup& q);

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const Mat& m);

}  // namespace sphereblock
