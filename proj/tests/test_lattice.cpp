#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereblock/lattice.hpp"

#include <random>

using namespace sphereblock;

namespace {

Mat rows(std::initializer_list<std::initializer_list<int>> r) {
  Mat m;
  for (auto& row : r) {
    Vec v;
    for (int x : row) v.push_back(x);
    m.push_back(v);
  }
  return m;
}

Vec vec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(x);
  return v;
}

Mat random_mat(std::mt19937& rng, std::size_t n, std::size_t m, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat a(n, Vec(m));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

// Random unimodular row recombination of a basis.
Mat shuffle_basis(std::mt19937& rng, Mat b) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, b.empty() ? 0 : b.size() - 1);
  for (int step = 0; step < 20 && b.size() > 1; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int q = coef(rng);
    for (std::size_t c = 0; c < b[i].size(); ++c) b[i][c] += q * b[j][c];
  }
  return b;
}

}  // namespace

TEST_CASE("hermite normal form is canonical") {
  Mat h = hermite_normal_form(rows({{2, 4, 6}, {4, 10, 12}}));
  CHECK(h == rows({{2, 0, 6}, {0, 2, 0}}));

  // Any unimodular recombination of a basis yields the same canonical form.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Mat b = random_mat(rng, 3, 4, -6, 6);
    Mat h1 = hermite_normal_form(b);
    Mat h2 = hermite_normal_form(shuffle_basis(rng, b));
    CHECK(h1 == h2);
  }
}

TEST_CASE("hermite normal form drops dependent rows") {
  Mat h = hermite_normal_form(rows({{1, 2}, {2, 4}, {3, 6}}));
  CHECK(h == rows({{1, 2}}));
  CHECK(hermite_normal_form(rows({{0, 0}, {0, 0}})).empty());
}

TEST_CASE("smith normal form on pinned examples") {
  SUBCASE("diag(2,3) has invariant factors 1,6") {
    SmithResult s = smith_normal_form(rows({{2, 0}, {0, 3}}));
    CHECK(s.diag == std::vector<Int>{1, 6});
    CHECK(s.rank == 2);
  }
  SUBCASE("[[2,4],[6,8]] has invariant factors 2,4") {
    SmithResult s = smith_normal_form(rows({{2, 4}, {6, 8}}));
    CHECK(s.diag == std::vector<Int>{2, 4});
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    Mat a = random_mat(rng, n, m, -9, 9);
    SmithResult s = smith_normal_form(a);
    // D = U * A * V
    CHECK(s.D == mat_mul(mat_mul(s.U, a), s.V));
    // V * Vinv = I (hence V is unimodular)
    CHECK(mat_mul(s.V, s.Vinv) == identity_mat(m));
    // Diagonal, nonnegative, divisibility chain.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) CHECK(s.D[i][j] == 0);
    for (std::size_t k = 0; k < s.diag.size(); ++k) {
      CHECK(s.diag[k] >= 0);
      if (k + 1 < s.diag.size() && s.diag[k] != 0)
        CHECK(s.diag[k + 1] % s.diag[k] == 0);
      if (s.diag[k] == 0 && k + 1 < s.diag.size()) CHECK(s.diag[k + 1] == 0);
    }
  }
}

TEST_CASE("membership and coordinates") {
  Sublattice l = Sublattice::from_rows(2, rows({{1, -1}, {0, 3}}));
  CHECK(member(vec({1, 2}), l));
  CHECK(member(vec({2, 1}), l));
  CHECK_FALSE(member(vec({1, 1}), l));
  auto c = coords_in_basis(vec({2, 1}), l);
  REQUIRE(c.has_value());
  // Reconstruct: coefficients apply to the canonical basis rows.
  Vec back(2, 0);
  for (std::size_t i = 0; i < l.basis.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j) back[j] += (*c)[i] * l.basis[i][j];
  CHECK(back == vec({2, 1}));
}

TEST_CASE("member_sum distinguishes sum membership") {
  Sublattice l1 = Sublattice::from_rows(2, rows({{1, -1}}));
  Sublattice l2 = Sublattice::from_rows(2, rows({{0, 2}}));
  // L1 + L2 = {(x, y) : x + y even}
  CHECK(member_sum(vec({1, 1}), l1, l2));
  CHECK(member_sum(vec({1, -3}), l1, l2));
  CHECK_FALSE(member_sum(vec({1, 0}), l1, l2));
}

TEST_CASE("join is the canonical sum") {
  Sublattice l1 = Sublattice::from_rows(2, rows({{1, -1}}));
  Sublattice l2 = Sublattice::from_rows(2, rows({{0, 2}}));
  Sublattice j = join(l1, l2);
  CHECK(j.rank() == 2);
  CHECK(j.basis == rows({{1, 1}, {0, 2}}));
  CHECK(join(l2, l1) == j);
}

TEST_CASE("saturation") {
  // Full-rank sublattice saturates to the whole ambient lattice.
  Sublattice l = Sublattice::from_rows(2, rows({{2, 2}, {0, 4}}));
  CHECK(saturation(l).basis == identity_mat(2));

  // Rank-1: saturation divides out the content of the generator.
  Sublattice m = Sublattice::from_rows(3, rows({{2, 4, 6}}));
  CHECK(saturation(m).basis == rows({{1, 2, 3}}));

  SUBCASE("quotient by a saturation is torsion-free") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t n = 2 + trial % 3;
      Sublattice a = Sublattice::from_rows(n, random_mat(rng, 1 + trial % n, n, -5, 5));
      Sublattice sat = saturation(a);
      CHECK(sat.rank() == a.rank());
      // Every basis vector of a lies in sat.
      for (const Vec& r : a.basis) CHECK(member(r, sat));
      QuotientGroup q = quotient(n, sat);
      CHECK(q.torsion_count == 0);
      // Saturating twice changes nothing.
      CHECK(saturation(sat) == sat);
    }
  }
}

TEST_CASE("quotient groups and invariant factors") {
  SUBCASE("free quotient Z^2 / span{(1,-1)}") {
    QuotientGroup q = quotient(2, Sublattice::from_rows(2, rows({{1, -1}})));
    CHECK(q.factors == std::vector<Int>{0});
    CHECK(q.torsion_count == 0);
    CHECK(characters(q).size() == 1);
  }
  SUBCASE("(Z/2)^2") {
    QuotientGroup q = quotient(2, Sublattice::from_rows(2, rows({{2, 0}, {0, 2}})));
    CHECK(q.factors == std::vector<Int>{2, 2});
    CHECK(characters(q).size() == 4);
  }
  SUBCASE("Z/2 x Z/3 collapses to Z/6") {
    QuotientGroup q = quotient(2, Sublattice::from_rows(2, rows({{2, 0}, {0, 3}})));
    CHECK(q.factors == std::vector<Int>{6});
    CHECK(characters(q).size() == 6);
  }
  SUBCASE("trivial quotient reports no factors") {
    QuotientGroup q = quotient(2, Sublattice::from_rows(2, rows({{1, 0}, {0, 1}})));
    CHECK(q.factors.empty());
    CHECK(characters(q).size() == 1);
  }
}

TEST_CASE("project/lift round trips") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + trial % 3;
    Mat b = random_mat(rng, n, n, -4, 4);
    Sublattice l = Sublattice::from_rows(n, b);
    QuotientGroup q = quotient(n, l);
    // lift(project(x)) - x lies in L.
    Vec x(n);
    std::uniform_int_distribution<int> d(-20, 20);
    for (auto& e : x) e = d(rng);
    Vec r = q.project(x);
    Vec y = q.lift(r);
    CHECK(member(vec_sub(y, x), l));
    CHECK(q.project(y) == r);
    // Torsion characters enumerate distinct residues and lift back exactly.
    if (q.is_finite() && q.torsion_order() <= 64) {
      auto chars = characters(q);
      for (const Vec& c : chars) {
        Vec full = q.project(q.lift(c));
        CHECK(Vec(full.begin(), full.begin() + q.torsion_count) == c);
      }
    }
  }
}

TEST_CASE("quotient_pair presents big/small") {
  SUBCASE("index-2 pair in rank 2") {
    Sublattice big = Sublattice::from_rows(2, identity_mat(2));
    Sublattice small = Sublattice::from_rows(2, rows({{1, -1}, {1, 1}}));
    QuotientGroup q = quotient_pair(big, small);
    CHECK(q.factors == std::vector<Int>{2});
    CHECK(q.is_finite());
  }
  SUBCASE("rank-1 pair") {
    Sublattice big = Sublattice::from_rows(1, rows({{1}}));
    Sublattice small = Sublattice::from_rows(1, rows({{2}}));
    QuotientGroup q = quotient_pair(big, small);
    CHECK(q.factors == std::vector<Int>{2});
  }
  SUBCASE("containment is enforced") {
    Sublattice big = Sublattice::from_rows(2, rows({{2, 0}, {0, 2}}));
    Sublattice small = Sublattice::from_rows(2, rows({{1, 1}}));
    CHECK_THROWS_AS(quotient_pair(big, small), ConfigError);
  }
}

TEST_CASE("quotient_pair lift lives in big") {
  // Residue lifts computed through the pair presentation, mapped back to
  // ambient coordinates through the basis of big, land in big.
  Sublattice big = Sublattice::from_rows(2, rows({{1, -1}, {0, 2}}));
  Sublattice small = Sublattice::from_rows(2, rows({{2, -2}, {0, 4}}));
  QuotientGroup q = quotient_pair(big, small);
  CHECK(q.torsion_order() == 4);
  for (const Vec& c : characters(q)) {
    Vec inner = q.lift(c);  // coordinates in the basis of big
    Vec ambient(2, 0);
    for (std::size_t i = 0; i < big.basis.size(); ++i)
      for (std::size_t j = 0; j < 2; ++j) ambient[j] += inner[i] * big.basis[i][j];
    CHECK(member(ambient, big));
  }
}
