#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereblock/pairdata.hpp"

using namespace sphereblock;

namespace {

Vec v(std::initializer_list<long long> xs) {
  Vec out;
  for (long long x : xs) out.push_back(x);
  return out;
}

Mat m(std::initializer_list<std::initializer_list<long long>> rows) {
  Mat out;
  for (auto& r : rows) {
    Vec row;
    for (long long x : r) row.push_back(x);
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("builtin psl_pso 3 invariants") {
  PairDatum p = builtin_pair(BuiltinFamily::psl_pso, 3);
  CHECK(p.datum.mode == LatticeMode::adjoint);
  CHECK(p.label == "psl_pso:3");
  PairInvariants inv = derive_invariants(p);
  CHECK(inv.K_full.basis == m({{2, 0}, {0, 2}}));
  CHECK(inv.K_circ.basis == m({{1, 0}, {0, 1}}));
  CHECK(inv.C_group.factors == std::vector<Int>{2, 2});
  REQUIRE(inv.C_chars.size() == 4);
  CHECK(inv.C_chars[0] == v({0, 0}));
  CHECK(inv.C_chars[1] == v({0, 1}));
  CHECK(inv.C_chars[2] == v({1, 0}));
  CHECK(inv.C_chars[3] == v({1, 1}));
  CHECK(inv.W0.size() == 6);  // all of W
  CHECK(inv.W0.size() == inv.W.size);
  CHECK(restrict_to_C(inv, v({0, 0})) == v({0, 0}));
  CHECK(restrict_to_C(inv, v({1, 0})) == v({1, 0}));
  CHECK(restrict_to_C(inv, v({1, 1})) == v({1, 1}));
  CHECK(restrict_to_C(inv, v({2, 2})) == v({0, 0}));
  // every character is its own negative in (Z/2)^2
  for (const Vec& c : inv.C_chars) CHECK(inv.neg_char(c) == c);
  CHECK(inv.char_index(v({1, 0})) == 2);
  CHECK(inv.char_index(v({5, 0})) == -1);
}

TEST_CASE("builtin sl_so uses the weight lattice") {
  PairDatum p = builtin_pair(BuiltinFamily::sl_so, 3);
  CHECK(p.datum.mode == LatticeMode::simply_connected);
  PairInvariants inv = derive_invariants(p);
  CHECK(inv.K_full.basis == m({{2, 0}, {0, 2}}));
  CHECK(inv.C_group.factors == std::vector<Int>{2, 2});
  CHECK(inv.W0.size() == inv.W.size);
}

TEST_CASE("pgl_po is the adjoint alias") {
  PairDatum a = builtin_pair(BuiltinFamily::pgl_po, 4);
  PairDatum b = builtin_pair(BuiltinFamily::psl_pso, 4);
  CHECK(a.datum.mode == LatticeMode::adjoint);
  CHECK(a.theta_star == b.theta_star);
  CHECK(a.label == "pgl_po:4");
  PairInvariants ia = derive_invariants(a);
  PairInvariants ib = derive_invariants(b);
  CHECK(ia.K_full.basis == ib.K_full.basis);
  CHECK(ia.C_group.factors == ib.C_group.factors);
}

TEST_CASE("builtin n range") {
  CHECK_THROWS_AS(builtin_pair(BuiltinFamily::psl_pso, 1), ConfigError);
  CHECK_THROWS_AS(builtin_pair(BuiltinFamily::sl_so, 10), ConfigError);
  CHECK_NOTHROW(builtin_pair(BuiltinFamily::psl_pso, 9));
  CHECK_THROWS_AS(family_from_string("so_sl"), ConfigError);
}

TEST_CASE("lift then restrict is the identity on characters") {
  for (int n : {2, 3, 4}) {
    PairInvariants inv = derive_invariants(builtin_pair(BuiltinFamily::psl_pso, n));
    REQUIRE(inv.C_lifts.size() == inv.C_chars.size());
    for (std::size_t i = 0; i < inv.C_chars.size(); ++i) {
      CHECK(restrict_to_C(inv, inv.C_lifts[i]) == inv.C_chars[i]);
      CHECK(member(inv.C_lifts[i], inv.K_circ));
    }
  }
}

TEST_CASE("theta = +identity: trivial component group, W0 = {e}") {
  RootDatum rd = build_root_datum('A', 2, LatticeMode::adjoint);
  PairDatum p{rd, identity_mat(2), "split-check", std::nullopt, std::nullopt};
  PairInvariants inv = derive_invariants(p);
  CHECK(inv.K_full.basis.empty());
  CHECK(inv.K_circ.basis.empty());
  CHECK(inv.C_group.factors.empty());
  REQUIRE(inv.C_chars.size() == 1);
  CHECK(inv.C_chars[0].empty());
  CHECK(inv.W0 == std::vector<int>{0});
  CHECK(restrict_to_C(inv, v({0, 0})).empty());
  CHECK_THROWS_AS(restrict_to_C(inv, v({1, 0})), ConfigError);
}

TEST_CASE("diagram involution: rank-one saturated kernel") {
  RootDatum rd = build_root_datum('A', 2, LatticeMode::adjoint);
  // swap alpha1 <-> alpha2
  PairDatum p{rd, m({{0, 1}, {1, 0}}), "swap", std::nullopt, std::nullopt};
  PairInvariants inv = derive_invariants(p);
  CHECK(inv.K_full.basis == m({{1, -1}}));
  CHECK(inv.K_circ.basis == m({{1, -1}}));
  CHECK(inv.C_chars.size() == 1);  // K_circ / K_full is trivial
  CHECK(restrict_to_C(inv, v({1, -1})).empty());
  CHECK_THROWS_AS(restrict_to_C(inv, v({1, 0})), ConfigError);
}

TEST_CASE("theta validation") {
  RootDatum rd = build_root_datum('A', 2, LatticeMode::adjoint);
  // wrong dimensions
  CHECK_THROWS_AS(
      derive_invariants(PairDatum{rd, identity_mat(3), "bad", {}, {}}),
      ConfigError);
  // not an involution
  CHECK_THROWS_AS(
      derive_invariants(PairDatum{rd, m({{1, 1}, {0, 1}}), "bad", {}, {}}),
      ConfigError);
  // involution that does not permute the roots
  CHECK_THROWS_AS(
      derive_invariants(PairDatum{rd, m({{5, 2}, {-12, -5}}), "bad", {}, {}}),
      ConfigError);
}

TEST_CASE("transform re-canonicalizes") {
  RootDatum rd = build_root_datum('A', 2, LatticeMode::adjoint);
  WeylGroup w = enumerate_weyl(rd);
  Sublattice l = Sublattice::from_rows(2, m({{1, 2}}));
  Sublattice img = transform(w.matrix_of(1), l);
  CHECK(img.basis == m({{1, 2}}));  // s1 (alpha1 + 2 alpha2) = alpha1 + 2 alpha2
  Sublattice full = Sublattice::from_rows(2, m({{1, 0}, {0, 1}}));
  for (std::size_t i = 0; i < w.size; ++i)
    CHECK(transform(w.matrix_of(static_cast<int>(i)), full) == full);
}

TEST_CASE("little Weyl containment check") {
  RootDatum rd = build_root_datum('A', 2, LatticeMode::adjoint);
  Mat minus = m({{-1, 0}, {0, -1}});
  PairDatum good{rd, minus, "wl", {}, std::vector<std::vector<int>>{{}, {0}}};
  CHECK_NOTHROW(derive_invariants(good));  // e and s1 lie in W0 = W
  RootDatum rd2 = build_root_datum('A', 2, LatticeMode::adjoint);
  PairDatum bad{rd2, identity_mat(2), "wl", {}, std::vector<std::vector<int>>{{0}}};
  // W0 = {e} for theta = +1, so s1 is not allowed
  CHECK_THROWS_AS(derive_invariants(bad), ConfigError);
}
