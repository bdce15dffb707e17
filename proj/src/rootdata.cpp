#include "sphereblock/rootdata.hpp"

#include <algorithm>
#include <cstring>
#include <set>

namespace sphereblock {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
  auto bad = [&] {
    throw ConfigError(std::string("unsupported Cartan type/rank: ") + type +
                      std::to_string(rank));
  };
  int lo = 0, hi = 8;
  switch (type) {
    case 'A': lo = 1; break;
    case 'B': lo = 2; break;
    case 'C': lo = 2; break;
    case 'D': lo = 4; break;
    case 'E': lo = 6; break;
    case 'F': lo = 4; hi = 4; break;
    case 'G': lo = 2; hi = 2; break;
    default: bad();
  }
  if (rank < lo || rank > hi) bad();

  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_rank short
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      c[rank - 1][rank - 2] = -2;
      break;
    case 'C':  // alpha_rank long
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      c[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < rank - 1; ++i) link(i, i + 1);
      link(rank - 3, rank - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      link(0, 2);
      for (int i = 2; i + 1 < rank; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

std::size_t positive_root_count(char type, int rank) {
  switch (type) {
    case 'A': return static_cast<std::size_t>(rank) * (rank + 1) / 2;
    case 'B':
    case 'C': return static_cast<std::size_t>(rank) * rank;
    case 'D': return static_cast<std::size_t>(rank) * (rank - 1);
    case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

std::string flat_key(const std::vector<int32_t>& m) {
  return std::string(reinterpret_cast<const char*>(m.data()),
                     m.size() * sizeof(int32_t));
}

std::vector<int32_t> flat_identity(int rank) {
  std::vector<int32_t> m(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i) * rank + i] = 1;
  return m;
}

std::vector<int32_t> flat_mul(const std::vector<int32_t>& a,
                              const std::vector<int32_t>& b, int rank) {
  std::vector<int64_t> acc(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) {
      int64_t aik = a[static_cast<std::size_t>(i) * rank + k];
      if (!aik) continue;
      for (int j = 0; j < rank; ++j)
        acc[static_cast<std::size_t>(i) * rank + j] +=
            aik * b[static_cast<std::size_t>(k) * rank + j];
    }
  std::vector<int32_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] > (1 << 20) || acc[i] < -(1 << 20))
      throw InternalError("Weyl matrix entry overflow guard tripped");
    out[i] = static_cast<int32_t>(acc[i]);
  }
  return out;
}

}  // namespace

LatticeMode lattice_mode_from_string(const std::string& s) {
  if (s == "simply_connected") return LatticeMode::simply_connected;
  if (s == "adjoint" || s == "root_lattice") return LatticeMode::adjoint;
  throw ConfigError("unknown lattice_mode: " + s);
}

std::string to_string(LatticeMode m) {
  return m == LatticeMode::adjoint ? "adjoint" : "simply_connected";
}

Int RootDatum::pairing(const Vec& lam, int i) const {
  Int out = 0;
  for (int j = 0; j < rank; ++j) out += simple_coroots[i][j] * lam[j];
  return out;
}

Int weyl_order(char type, int rank) {
  auto fact = [](int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (type) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return fact(rank) << rank;
    case 'D': return fact(rank) << (rank - 1);
    case 'E': return rank == 6 ? Int(51840)
                   : rank == 7 ? Int(2903040)
                               : Int(696729600);
    case 'F': return Int(1152);
    case 'G': return Int(12);
  }
  throw ConfigError(std::string("unsupported Cartan type: ") + type);
}

RootDatum build_root_datum(char type, int rank, LatticeMode mode) {
  RootDatum rd;
  rd.cartan_type = type;
  rd.rank = rank;
  rd.mode = mode;
  rd.cartan = cartan_matrix(type, rank);
  const auto& c = rd.cartan;

  rd.simple_roots = Mat(rank, Vec(rank, 0));
  rd.simple_coroots = Mat(rank, Vec(rank, 0));
  rd.refl.assign(rank, identity_mat(rank));
  for (int i = 0; i < rank; ++i) {
    if (mode == LatticeMode::adjoint) {
      // X*(T) = root lattice in simple-root coordinates.
      rd.simple_roots[i][i] = 1;
      for (int j = 0; j < rank; ++j) {
        rd.simple_coroots[i][j] = c[i][j];
        rd.refl[i][i][j] = (i == j ? 1 : 0) - c[i][j];
      }
    } else {
      // X*(T) = weight lattice in fundamental-weight coordinates.
      for (int j = 0; j < rank; ++j) rd.simple_roots[i][j] = c[j][i];
      rd.simple_coroots[i][i] = 1;
      for (int j = 0; j < rank; ++j) rd.refl[i][j][i] -= c[j][i];
    }
  }
  for (int i = 0; i < rank; ++i)
    if (mat_mul(rd.refl[i], rd.refl[i]) != identity_mat(rank))
      throw InternalError("simple reflection is not an involution");

  // Close the simple roots under reflections, tracked in simple-root
  // coordinates where positivity is a sign condition.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier)
      for (int i = 0; i < rank; ++i) {
        // s_i in simple-root coordinates: subtract <v, alpha_i^vee> alpha_i.
        int pair = 0;
        for (int j = 0; j < rank; ++j) pair += c[i][j] * v[j];
        std::vector<int> w = v;
        w[i] -= pair;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  for (const auto& v : seen) {
    bool pos = false, neg = false;
    for (int x : v) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    if (!pos) continue;
    if (neg) throw InternalError("mixed-sign root generated");
    Vec in_x(rank, 0);
    if (mode == LatticeMode::adjoint) {
      for (int j = 0; j < rank; ++j) in_x[j] = v[j];
    } else {
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) in_x[i] += c[i][j] * v[j];
    }
    rd.positive_roots.push_back(in_x);
  }
  if (rd.positive_roots.size() != positive_root_count(type, rank))
    throw InternalError("positive root count mismatch");

  rd.rho2.assign(rank, 0);
  for (const Vec& r : rd.positive_roots) rd.rho2 = vec_add(rd.rho2, r);
  for (int i = 0; i < rank; ++i)
    if (rd.pairing(rd.rho2, i) != 2)
      throw InternalError("<rho, alpha_i^vee> != 1");
  return rd;
}

int WeylGroup::find_flat(const std::vector<int32_t>& m) const {
  auto it = index.find(flat_key(m));
  return it == index.end() ? -1 : it->second;
}

int WeylGroup::find(const Mat& m) const {
  std::vector<int32_t> f(static_cast<std::size_t>(rank) * rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Int& x = m[i][j];
      if (x > (1 << 20) || x < -(1 << 20)) return -1;
      f[static_cast<std::size_t>(i) * rank + j] = static_cast<int32_t>(x);
    }
  return find_flat(f);
}

int WeylGroup::mul(int a, int b) const {
  int idx = b;
  const std::vector<int>& w = words[a];
  for (std::size_t j = w.size(); j-- > 0;) idx = left[w[j]][idx];
  return idx;
}

int WeylGroup::element_of_word(const std::vector<int>& word) const {
  int idx = 0;
  for (std::size_t j = word.size(); j-- > 0;) {
    if (word[j] < 0 || word[j] >= rank)
      throw ConfigError("word contains out-of-range simple index");
    idx = left[word[j]][idx];
  }
  return idx;
}

Mat WeylGroup::matrix_of(int w) const {
  Mat m(rank, Vec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      m[i][j] = mats[w][static_cast<std::size_t>(i) * rank + j];
  return m;
}

WeylElement WeylGroup::element(int w) const {
  return WeylElement{matrix_of(w), words[w], lengths[w]};
}

std::string WeylGroup::word_string(int w) const {
  if (words[w].empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < words[w].size(); ++i) {
    if (i) s += '.';
    s += 's';
    s += std::to_string(words[w][i] + 1);
  }
  return s;
}

WeylGroup enumerate_weyl(const RootDatum& rd) {
  Int order = weyl_order(rd.cartan_type, rd.rank);
  if (order > 1000000)
    throw ConfigError("Weyl group too large to enumerate: |W| = " +
                      order.str());
  int rank = rd.rank;
  std::vector<std::vector<int32_t>> gens(rank);
  for (int i = 0; i < rank; ++i) {
    gens[i].resize(static_cast<std::size_t>(rank) * rank);
    for (int a = 0; a < rank; ++a)
      for (int b = 0; b < rank; ++b)
        gens[i][static_cast<std::size_t>(a) * rank + b] =
            static_cast<int32_t>(rd.refl[i][a][b]);
  }

  // Breadth-first closure; BFS depth is the length function.
  std::vector<std::vector<int32_t>> mats{flat_identity(rank)};
  std::vector<int> lengths{0};
  std::unordered_map<std::string, int> index{{flat_key(mats[0]), 0}};
  std::vector<std::vector<int>> left(rank);
  std::size_t done = 0;
  while (done < mats.size()) {
    std::size_t idx = done++;
    std::vector<int32_t> cur = mats[idx];
    for (int g = 0; g < rank; ++g) {
      std::vector<int32_t> prod = flat_mul(gens[g], cur, rank);
      auto [it, fresh] = index.try_emplace(flat_key(prod),
                                           static_cast<int>(mats.size()));
      if (fresh) {
        mats.push_back(std::move(prod));
        lengths.push_back(lengths[idx] + 1);
      }
      for (int gg = 0; gg < rank; ++gg)
        left[gg].resize(mats.size(), -1);
      left[g][idx] = it->second;
    }
  }
  if (Int(mats.size()) != order)
    throw InternalError("Weyl enumeration found wrong group order");
  std::size_t n = mats.size();
  for (int g = 0; g < rank; ++g)
    for (std::size_t w = 0; w < n; ++w)
      if (left[g][w] == -1)
        left[g][w] = index.at(flat_key(flat_mul(gens[g], mats[w], rank)));

  // Lexicographically least reduced word: greedily take the smallest left
  // descent.  Elements appear in BFS order, so shorter elements are ready
  // first.
  std::vector<std::vector<int>> words(n);
  for (std::size_t w = 1; w < n; ++w) {
    for (int g = 0; g < rank; ++g) {
      std::size_t down = static_cast<std::size_t>(left[g][w]);
      if (lengths[down] < lengths[w]) {
        words[w].reserve(words[down].size() + 1);
        words[w].push_back(g);
        words[w].insert(words[w].end(), words[down].begin(), words[down].end());
        break;
      }
    }
  }

  // Canonical order: (length, lexicographic word).
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return words[a] < words[b];
  });
  std::vector<int> rank_of(n);
  for (std::size_t i = 0; i < n; ++i) rank_of[perm[i]] = static_cast<int>(i);

  WeylGroup wg;
  wg.rank = rank;
  wg.size = n;
  wg.mats.resize(n);
  wg.lengths.resize(n);
  wg.words.resize(n);
  wg.left.assign(rank, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    int old = perm[i];
    wg.mats[i] = std::move(mats[old]);
    wg.lengths[i] = lengths[old];
    wg.words[i] = std::move(words[old]);
    wg.index.emplace(flat_key(wg.mats[i]), static_cast<int>(i));
    for (int g = 0; g < rank; ++g) wg.left[g][i] = rank_of[left[g][old]];
  }
  wg.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> rev(wg.words[i].rbegin(), wg.words[i].rend());
    wg.inverse[i] = wg.element_of_word(rev);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (wg.inverse[static_cast<std::size_t>(wg.inverse[i])] !=
        static_cast<int>(i))
      throw InternalError("inverse table is not an involution");
  return wg;
}

Vec rho_shift(const RootDatum& rd, const Mat& w) {
  Vec shifted = mat_vec(w, rd.rho2);
  Vec out(rd.rank);
  for (int i = 0; i < rd.rank; ++i) {
    Int d = shifted[i] - rd.rho2[i];
    if (d % 2 != 0) throw InternalError("w*rho - rho not integral");
    out[i] = d / 2;
  }
  return out;
}

Vec dot_act(const RootDatum& rd, const Mat& w, const Vec& lam) {
  return vec_add(mat_vec(w, lam), rho_shift(rd, w));
}

Vec ddot_act(const RootDatum& rd, const Mat& w, const Vec& lam) {
  return vec_sub(mat_vec(w, lam), rho_shift(rd, w));
}

bool bruhat_leq(const WeylGroup& w, int w1, int w2,
                const std::vector<int>& parabolic_subset) {
  for (int g : parabolic_subset)
    if (g < 0 || g >= w.rank)
      throw ConfigError("parabolic subset index out of range");
  // Minimal-length coset representative modulo the parabolic subgroup.
  auto min_rep = [&](int u) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int g : parabolic_subset) {
        int us = w.inverse[w.left[g][w.inverse[u]]];  // u * s_g
        if (w.lengths[us] < w.lengths[u]) {
          u = us;
          moved = true;
          break;
        }
      }
    }
    return u;
  };
  int u = min_rep(w1), v = min_rep(w2);
  // Subword criterion via left descents.
  while (true) {
    if (u == v) return true;
    if (w.lengths[u] >= w.lengths[v]) return false;
    int g = 0;
    while (w.lengths[w.left[g][v]] >= w.lengths[v]) ++g;
    int su = w.left[g][u];
    if (w.lengths[su] < w.lengths[u]) u = su;
    v = w.left[g][v];
  }
}

}  // namespace sphereblock
