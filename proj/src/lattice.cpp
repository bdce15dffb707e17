#include "sphereblock/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace sphereblock {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Mat hermite_normal_form(const Mat& rows) {
  Mat a = rows;
  std::size_t nrows = a.size();
  std::size_t ncols = nrows ? a[0].size() : 0;
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
    // Euclidean elimination within this column, below pivot_row.
    while (true) {
      std::size_t best = nrows;
      for (std::size_t r = pivot_row; r < nrows; ++r) {
        if (a[r][col] == 0) continue;
        if (best == nrows || abs(a[r][col]) < abs(a[best][col])) best = r;
      }
      if (best == nrows) break;  // column is clear
      std::swap(a[pivot_row], a[best]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < nrows; ++r) {
        if (a[r][col] == 0) continue;
        Int q = floor_div(a[r][col], a[pivot_row][col]);
        for (std::size_t c = col; c < ncols; ++c) a[r][c] -= q * a[pivot_row][c];
        if (a[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[pivot_row][col] == 0) continue;
    if (a[pivot_row][col] < 0)
      for (std::size_t c = col; c < ncols; ++c) a[pivot_row][c] = -a[pivot_row][c];
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Int q = floor_div(a[r][col], a[pivot_row][col]);
      if (q == 0) continue;
      for (std::size_t c = col; c < ncols; ++c) a[r][c] -= q * a[pivot_row][c];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  a.resize(pivot_row);
  return a;
}

Sublattice Sublattice::from_rows(std::size_t ambient, const Mat& rows) {
  for (const Vec& r : rows)
    if (r.size() != ambient) throw ConfigError("sublattice row has wrong length");
  Sublattice l;
  l.ambient = ambient;
  l.basis = hermite_normal_form(rows);
  return l;
}

SmithResult smith_normal_form(const Mat& m) {
  std::size_t n = m.size();
  std::size_t cols = n ? m[0].size() : 0;
  SmithResult res;
  res.D = m;
  res.U = identity_mat(n);
  res.V = identity_mat(cols);
  res.Vinv = identity_mat(cols);
  Mat& d = res.D;

  auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < cols; ++c) d[dst][c] -= q * d[src][c];
    for (std::size_t c = 0; c < n; ++c) res.U[dst][c] -= q * res.U[src][c];
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < n; ++r) d[r][dst] -= q * d[r][src];
    for (std::size_t r = 0; r < cols; ++r) res.V[r][dst] -= q * res.V[r][src];
    // (V E)^{-1} = E^{-1} V^{-1}: the inverse op adds q * row dst to row src.
    for (std::size_t c = 0; c < cols; ++c) res.Vinv[src][c] += q * res.Vinv[dst][c];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(res.U[i], res.U[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(d[r][i], d[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(res.V[r][i], res.V[r][j]);
    std::swap(res.Vinv[i], res.Vinv[j]);
  };
  auto row_neg = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) d[i][c] = -d[i][c];
    for (std::size_t c = 0; c < n; ++c) res.U[i][c] = -res.U[i][c];
  };

  std::size_t lim = std::min(n, cols);
  for (std::size_t k = 0; k < lim; ++k) {
    while (true) {
      // Bring the minimal-absolute-value nonzero of the trailing block to (k,k).
      std::size_t br = n, bc = cols;
      for (std::size_t r = k; r < n; ++r)
        for (std::size_t c = k; c < cols; ++c) {
          if (d[r][c] == 0) continue;
          if (br == n || abs(d[r][c]) < abs(d[br][bc])) { br = r; bc = c; }
        }
      if (br == n) break;  // trailing block is zero
      if (br != k) row_swap(k, br);
      if (bc != k) col_swap(k, bc);
      bool dirty = false;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (d[r][k] == 0) continue;
        row_sub(r, k, floor_div(d[r][k], d[k][k]));
        if (d[r][k] != 0) dirty = true;
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (d[k][c] == 0) continue;
        col_sub(c, k, floor_div(d[k][c], d[k][k]));
        if (d[k][c] != 0) dirty = true;
      }
      if (dirty) continue;
      // Divisibility: d[k][k] must divide the whole trailing block.
      bool fixed = true;
      for (std::size_t r = k + 1; r < n && fixed; ++r)
        for (std::size_t c = k + 1; c < cols && fixed; ++c)
          if (d[r][c] % d[k][k] != 0) {
            row_sub(k, r, Int(-1));  // fold the offending row in and restart
            fixed = false;
          }
      if (fixed) break;
    }
    if (d[k][k] < 0) row_neg(k);
  }
  for (std::size_t k = 0; k < lim; ++k) {
    res.diag.push_back(d[k][k]);
    if (d[k][k] != 0) ++res.rank;
  }
  return res;
}

bool member(const Vec& v, const Sublattice& l) {
  return coords_in_basis(v, l).has_value();
}

std::optional<Vec> coords_in_basis(const Vec& v, const Sublattice& l) {
  if (v.size() != l.ambient) throw ConfigError("vector/lattice ambient mismatch");
  Vec rem = v;
  Vec coeffs;
  coeffs.reserve(l.basis.size());
  for (const Vec& row : l.basis) {
    std::size_t p = 0;
    while (p < l.ambient && row[p] == 0) ++p;
    if (rem[p] % row[p] != 0) return std::nullopt;
    Int a = rem[p] / row[p];
    if (a != 0)
      for (std::size_t c = p; c < l.ambient; ++c) rem[c] -= a * row[c];
    coeffs.push_back(a);
  }
  if (!is_zero(rem)) return std::nullopt;
  return coeffs;
}

Sublattice join(const Sublattice& l1, const Sublattice& l2) {
  if (l1.ambient != l2.ambient) throw ConfigError("join: ambient mismatch");
  Mat rows = l1.basis;
  rows.insert(rows.end(), l2.basis.begin(), l2.basis.end());
  return Sublattice::from_rows(l1.ambient, rows);
}

bool member_sum(const Vec& v, const Sublattice& l1, const Sublattice& l2) {
  return member(v, join(l1, l2));
}

Sublattice saturation(const Sublattice& l) {
  if (l.basis.empty()) return l;
  // D = U B V; the saturation is spanned by the first rank(B) rows of Vinv.
  SmithResult s = smith_normal_form(l.basis);
  Mat rows(s.Vinv.begin(), s.Vinv.begin() + static_cast<std::ptrdiff_t>(s.rank));
  return Sublattice::from_rows(l.ambient, rows);
}

Int QuotientGroup::torsion_order() const {
  Int o = 1;
  for (std::size_t i = 0; i < torsion_count; ++i) o *= factors[i];
  return o;
}

Vec QuotientGroup::project(const Vec& x) const {
  if (x.size() != ambient) throw ConfigError("project: ambient mismatch");
  Vec out(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::size_t col = positions[k];
    Int y = 0;
    for (std::size_t i = 0; i < ambient; ++i) y += x[i] * snf.V[i][col];
    if (k < torsion_count) {
      y %= factors[k];
      if (y < 0) y += factors[k];
    }
    out[k] = y;
  }
  return out;
}

Vec QuotientGroup::lift(const Vec& residues) const {
  if (residues.size() > factors.size())
    throw ConfigError("lift: too many residues");
  Vec y(snf.Vinv.size(), 0);  // coordinates in the V-basis
  for (std::size_t k = 0; k < residues.size(); ++k) y[positions[k]] = residues[k];
  Vec out(ambient, 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t c = 0; c < ambient; ++c) out[c] += y[i] * snf.Vinv[i][c];
  }
  return out;
}

QuotientGroup quotient(std::size_t ambient, const Sublattice& l) {
  if (l.ambient != ambient) throw ConfigError("quotient: ambient mismatch");
  QuotientGroup q;
  q.ambient = ambient;
  Mat basis = l.basis.empty() ? Mat{Vec(ambient, 0)} : l.basis;
  q.snf = smith_normal_form(basis);
  for (std::size_t k = 0; k < q.snf.rank; ++k)
    if (q.snf.diag[k] > 1) {
      q.factors.push_back(q.snf.diag[k]);
      q.positions.push_back(k);
    }
  q.torsion_count = q.factors.size();
  for (std::size_t c = q.snf.rank; c < ambient; ++c) {
    q.factors.push_back(0);
    q.positions.push_back(c);
  }
  return q;
}

QuotientGroup quotient_pair(const Sublattice& big, const Sublattice& small) {
  if (big.ambient != small.ambient)
    throw ConfigError("quotient_pair: ambient mismatch");
  Mat rows;
  for (const Vec& r : small.basis) {
    auto c = coords_in_basis(r, big);
    if (!c) throw ConfigError("quotient_pair: small lattice not contained in big");
    rows.push_back(*c);
  }
  Sublattice inner = Sublattice::from_rows(big.rank(), rows);
  return quotient(big.rank(), inner);
}

std::vector<Vec> characters(const QuotientGroup& q) {
  std::vector<Vec> out;
  Int total = q.torsion_order();
  if (total > 1000000) throw ConfigError("characters: torsion part too large");
  std::size_t n = static_cast<std::size_t>(total);
  out.reserve(n);
  Vec cur(q.torsion_count, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(cur);
    for (std::size_t k = q.torsion_count; k-- > 0;) {
      if (++cur[k] < q.factors[k]) break;
      cur[k] = 0;
    }
  }
  return out;
}

Int determinant(const Mat& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  for (const Vec& row : m)
    if (row.size() != n) throw ConfigError("determinant: matrix not square");
  Mat a = m;
  Int prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace sphereblock
