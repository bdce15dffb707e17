#include "sphereblock/pairdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sphereblock {

BuiltinFamily family_from_string(const std::string& s) {
  if (s == "sl_so") return BuiltinFamily::sl_so;
  if (s == "psl_pso") return BuiltinFamily::psl_pso;
  if (s == "pgl_po") return BuiltinFamily::pgl_po;
  throw ConfigError("unknown builtin family: " + s);
}

std::string to_string(BuiltinFamily f) {
  switch (f) {
    case BuiltinFamily::sl_so: return "sl_so";
    case BuiltinFamily::psl_pso: return "psl_pso";
    case BuiltinFamily::pgl_po: return "pgl_po";
  }
  return "?";
}

PairDatum builtin_pair(BuiltinFamily family, int n) {
  if (n < 2 || n > 9)
    throw ConfigError("builtin pair needs 2 <= n <= 9, got " +
                      std::to_string(n));
  // pgl_po is the same complex pair as psl_pso; both use the adjoint form.
  LatticeMode mode = family == BuiltinFamily::sl_so
                         ? LatticeMode::simply_connected
                         : LatticeMode::adjoint;
  PairDatum pair;
  pair.datum = build_root_datum('A', n - 1, mode);
  pair.theta_star = identity_mat(n - 1);
  for (int i = 0; i < n - 1; ++i) pair.theta_star[i][i] = -1;
  pair.label = to_string(family) + ":" + std::to_string(n);
  return pair;
}

Sublattice transform(const Mat& w, const Sublattice& l) {
  Mat rows;
  rows.reserve(l.basis.size());
  for (const Vec& r : l.basis) rows.push_back(mat_vec(w, r));
  return Sublattice::from_rows(l.ambient, rows);
}

namespace {

void validate_pair(const PairDatum& pair) {
  const RootDatum& rd = pair.datum;
  std::size_t r = static_cast<std::size_t>(rd.rank);
  if (pair.theta_star.size() != r)
    throw ConfigError("theta_star has wrong dimensions");
  for (const Vec& row : pair.theta_star)
    if (row.size() != r) throw ConfigError("theta_star has wrong dimensions");
  if (mat_mul(pair.theta_star, pair.theta_star) != identity_mat(r))
    throw ConfigError("theta_star is not an involution");
  std::set<Vec> roots;
  for (const Vec& a : rd.positive_roots) {
    roots.insert(a);
    Vec neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    roots.insert(neg);
  }
  for (const Vec& a : rd.positive_roots)
    if (!roots.count(mat_vec(pair.theta_star, a)))
      throw ConfigError("theta_star does not preserve the root system");
}

}  // namespace

PairInvariants derive_invariants(const PairDatum& pair) {
  validate_pair(pair);
  const RootDatum& rd = pair.datum;
  int r = rd.rank;

  PairInvariants inv;
  inv.datum = rd;
  // K_full = im(1 - theta*): spanned by the columns of (I - theta*).
  Mat rows(r, Vec(r));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      rows[j][i] = (i == j ? 1 : 0) - pair.theta_star[i][j];
  inv.K_full = Sublattice::from_rows(r, rows);
  inv.K_circ = saturation(inv.K_full);
  inv.C_group = quotient_pair(inv.K_circ, inv.K_full);
  if (!inv.C_group.is_finite())
    throw InternalError("X*(C) has a free factor; K_circ/K_full must be finite");

  inv.W = enumerate_weyl(rd);
  if (inv.K_circ.basis == identity_mat(static_cast<std::size_t>(r))) {
    // K_circ = X*(T): both defining conditions of W0 are vacuous.
    inv.W0.resize(inv.W.size);
    for (std::size_t w = 0; w < inv.W.size; ++w)
      inv.W0[w] = static_cast<int>(w);
  } else {
    for (std::size_t w = 0; w < inv.W.size; ++w) {
      Mat m = inv.W.matrix_of(static_cast<int>(w));
      if (transform(m, inv.K_circ) != inv.K_circ) continue;
      if (!member(rho_shift(rd, m), inv.K_circ)) continue;
      inv.W0.push_back(static_cast<int>(w));
    }
  }
  if (inv.W0.empty() || inv.W0[0] != 0)
    throw InternalError("W0 does not contain the identity");

  if (pair.little_weyl_words) {
    std::vector<int> little;
    for (const auto& word : *pair.little_weyl_words)
      little.push_back(inv.W.element_of_word(word));
    std::sort(little.begin(), little.end());
    little.erase(std::unique(little.begin(), little.end()), little.end());
    for (int w : little)
      if (!std::binary_search(inv.W0.begin(), inv.W0.end(), w))
        throw ConfigError("little Weyl group not contained in W0: element " +
                          inv.W.word_string(w));
    inv.W_little = std::move(little);
  }

  inv.C_chars = characters(inv.C_group);
  for (const Vec& c : inv.C_chars) {
    Vec inner = inv.C_group.lift(c);  // coordinates in the K_circ basis
    Vec ambient(r, 0);
    for (std::size_t i = 0; i < inv.K_circ.basis.size(); ++i)
      for (int j = 0; j < r; ++j) ambient[j] += inner[i] * inv.K_circ.basis[i][j];
    inv.C_lifts.push_back(ambient);
  }
  return inv;
}

int PairInvariants::char_index(const Vec& residues) const {
  for (std::size_t i = 0; i < C_chars.size(); ++i)
    if (C_chars[i] == residues) return static_cast<int>(i);
  return -1;
}

Vec PairInvariants::neg_char(const Vec& residues) const {
  Vec out(residues.size());
  for (std::size_t k = 0; k < residues.size(); ++k) {
    Int d = C_group.factors[k];
    out[k] = residues[k] == 0 ? Int(0) : d - residues[k];
  }
  return out;
}

Vec restrict_to_C(const PairInvariants& inv, const Vec& lam) {
  auto coords = coords_in_basis(lam, inv.K_circ);
  if (!coords)
    throw ConfigError("weight is not in K_circ; restriction undefined");
  return inv.C_group.project(*coords);
}

}  // namespace sphereblock
