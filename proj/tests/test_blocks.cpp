#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereblock/blocks.hpp"

#include <algorithm>

using namespace sphereblock;

namespace {

Vec v(std::initializer_list<long long> xs) {
  Vec out;
  for (long long x : xs) out.push_back(x);
  return out;
}

struct Fixture {
  PairDatum pair;
  PairInvariants inv;
  OrbitGraph g;
  MonodromyClassTable table;
  explicit Fixture(int n, BuiltinFamily f = BuiltinFamily::psl_pso)
      : pair(builtin_pair(f, n)) {
    inv = derive_invariants(pair);
    g = generate_AI_orbits(pair, inv, n);
    table = class_table(inv);
  }
};

std::vector<std::size_t> sorted_totals(const BlockReport& r) {
  std::vector<std::size_t> out = r.totals;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("psl_pso 3: full anatomy") {
  Fixture fx(3);
  BlockReport report = block_report(fx.g, fx.inv, fx.table);
  CHECK(report.num_classes == 2);
  CHECK(report.total == 7);
  CHECK(report.totals == std::vector<std::size_t>{6, 1});
  REQUIRE(report.blocks.size() == 2);
  REQUIRE(report.blocks[1].size() == 1);
  CHECK(report.blocks[1][0].orbit_id == "e");
  CHECK(report.blocks[1][0].chi == v({1, 1}));
  // the big block holds the three remaining open-orbit characters plus one
  // irreducible per lower orbit
  int from_open = 0;
  for (const IrreducibleLabel& irr : report.blocks[0])
    if (irr.orbit_id == "e") ++from_open;
  CHECK(from_open == 3);
  CHECK(assign_class(fx.g, fx.inv, fx.table, "e", v({1, 1})) == 1);
  CHECK(assign_class(fx.g, fx.inv, fx.table, "e", v({1, 0})) == 0);
  CHECK(assign_class(fx.g, fx.inv, fx.table, "(13)", Vec{}) == 0);
}

TEST_CASE("psl_pso 3: closed-orbit lifts all land in the big class") {
  Fixture fx(3);
  int closed = fx.g.index_of("(13)");
  REQUIRE(closed >= 0);
  // candidates are s1.s2 (index 3) and s2.s1 (index 4)
  CHECK(fx.g.orbits[static_cast<std::size_t>(closed)].wy ==
        std::vector<int>{3, 4});
  for (int w : {3, 4})
    for (long long k = -2; k <= 2; ++k)
      CHECK(assign_class_with(fx.g, fx.inv, fx.table, closed, w,
                              v({k, -k})) == 0);
}

TEST_CASE("frozen block sizes for psl_pso") {
  Fixture f2(2);
  CHECK(sorted_totals(block_report(f2.g, f2.inv, f2.table)) ==
        std::vector<std::size_t>{3});
  Fixture f3(3);
  CHECK(sorted_totals(block_report(f3.g, f3.inv, f3.table)) ==
        std::vector<std::size_t>{1, 6});
  Fixture f4(4);
  CHECK(sorted_totals(block_report(f4.g, f4.inv, f4.table)) ==
        std::vector<std::size_t>{1, 1, 21});
  Fixture f5(5);
  CHECK(sorted_totals(block_report(f5.g, f5.inv, f5.table)) ==
        std::vector<std::size_t>{1, 15, 55});
}

TEST_CASE("blocks partition the irreducibles") {
  for (BuiltinFamily f : {BuiltinFamily::psl_pso, BuiltinFamily::sl_so}) {
    std::vector<std::size_t> expected_totals = {3, 7, 23, 71};
    for (int n = 2; n <= 5; ++n) {
      Fixture fx(n, f);
      BlockReport report = block_report(fx.g, fx.inv, fx.table);
      CHECK(report.total == expected_totals[static_cast<std::size_t>(n - 2)]);
      std::size_t sum = 0;
      for (std::size_t k = 0; k < report.blocks.size(); ++k) {
        CHECK(!report.blocks[k].empty());
        CHECK(report.blocks[k].size() == report.totals[k]);
        sum += report.totals[k];
      }
      CHECK(sum == report.total);
      std::size_t from_graph = 0;
      for (const OrbitNode& node : fx.g.orbits) from_graph += node.chars.size();
      CHECK(from_graph == report.total);
    }
  }
}

TEST_CASE("negation symmetry of block sizes") {
  for (int n : {4, 5}) {
    Fixture fx(n);
    BlockReport report = block_report(fx.g, fx.inv, fx.table);
    for (std::size_t k = 0; k < report.totals.size(); ++k)
      CHECK(report.totals[k] ==
            report.totals[static_cast<std::size_t>(fx.table.neg_map[k])]);
  }
}

TEST_CASE("path independence sweeps are clean") {
  Fixture f3(3);
  CHECK(check_path_independence(f3.g, f3.inv, f3.table, 3).empty());
  Fixture f4(4);
  CHECK(check_path_independence(f4.g, f4.inv, f4.table, 1).empty());
  Fixture s3(3, BuiltinFamily::sl_so);
  CHECK(check_path_independence(s3.g, s3.inv, s3.table, 2).empty());
}

TEST_CASE("assign_class input validation") {
  Fixture fx(3);
  CHECK_THROWS_AS(assign_class(fx.g, fx.inv, fx.table, "(77)", Vec{}),
                  ConfigError);
  CHECK_THROWS_AS(assign_class(fx.g, fx.inv, fx.table, "e", v({1})),
                  ConfigError);
  CHECK_THROWS_AS(assign_class(fx.g, fx.inv, fx.table, "e", v({2, 0})),
                  ConfigError);
}

TEST_CASE("open-orbit trivial character defines block zero") {
  for (int n : {2, 3, 4}) {
    Fixture fx(n);
    const OrbitNode& open = fx.g.orbits[static_cast<std::size_t>(fx.g.open_orbit)];
    CHECK(assign_class(fx.g, fx.inv, fx.table, open.id, open.chars.front()) == 0);
  }
}
