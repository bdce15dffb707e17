#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereblock/orbitgraph.hpp"

using namespace sphereblock;

namespace {

struct Fixture {
  PairDatum pair;
  PairInvariants inv;
  OrbitGraph g;
  explicit Fixture(int n, BuiltinFamily f = BuiltinFamily::psl_pso)
      : pair(builtin_pair(f, n)) {
    inv = derive_invariants(pair);
    g = generate_AI_orbits(pair, inv, n);
  }
};

std::vector<std::string> words_of(const Fixture& fx, const std::string& id) {
  std::vector<std::string> out;
  for (int w : wY_candidates(fx.g, id)) out.push_back(fx.inv.W.word_string(w));
  return out;
}

}  // namespace

TEST_CASE("psl_pso 3: nodes, dims, component groups") {
  Fixture fx(3);
  REQUIRE(fx.g.orbits.size() == 4);
  std::vector<std::string> ids;
  std::vector<int> dims;
  std::vector<std::size_t> nchars;
  for (const OrbitNode& node : fx.g.orbits) {
    ids.push_back(node.id);
    dims.push_back(node.dim);
    nchars.push_back(node.chars.size());
  }
  CHECK(ids == std::vector<std::string>{"e", "(12)", "(23)", "(13)"});
  CHECK(dims == std::vector<int>{5, 4, 4, 3});
  CHECK(nchars == std::vector<std::size_t>{4, 1, 1, 1});
  CHECK(fx.g.open_orbit == 0);
  CHECK(fx.g.dim_gh == 5);
  CHECK(fx.g.orbits[0].tau_star == fx.pair.theta_star);
  std::size_t total = 0;
  for (std::size_t c : nchars) total += c;
  CHECK(total == 7);
}

TEST_CASE("psl_pso 3: edges and their types") {
  Fixture fx(3);
  REQUIRE(fx.g.edges.size() == 4);
  auto type_of = [&](const std::string& lo, const std::string& up) {
    for (const OrbitEdge& e : fx.g.edges)
      if (fx.g.orbits[static_cast<std::size_t>(e.lower)].id == lo &&
          fx.g.orbits[static_cast<std::size_t>(e.upper)].id == up)
        return to_string(e.em_type);
    return std::string("missing");
  };
  CHECK(type_of("(12)", "e") == "N");
  CHECK(type_of("(23)", "e") == "N");
  CHECK(type_of("(13)", "(12)") == "U");
  CHECK(type_of("(13)", "(23)") == "U");
}

TEST_CASE("psl_pso 3: candidate words") {
  Fixture fx(3);
  CHECK(words_of(fx, "e") == std::vector<std::string>{"e"});
  CHECK(words_of(fx, "(12)") == std::vector<std::string>{"s1"});
  CHECK(words_of(fx, "(23)") == std::vector<std::string>{"s2"});
  CHECK(words_of(fx, "(13)") == std::vector<std::string>{"s1.s2", "s2.s1"});
  CHECK_THROWS_AS(wY_candidates(fx.g, "(99)"), ConfigError);
}

TEST_CASE("orbit counts follow the involution numbers") {
  std::vector<std::size_t> expected = {2, 4, 10, 26};
  for (int n = 2; n <= 5; ++n) {
    Fixture fx(n);
    CHECK(fx.g.orbits.size() == expected[static_cast<std::size_t>(n - 2)]);
    // candidate sets all share the codimension as length
    for (const OrbitNode& node : fx.g.orbits) {
      REQUIRE(!node.wy.empty());
      for (int w : node.wy)
        CHECK(fx.inv.W.lengths[static_cast<std::size_t>(w)] ==
              fx.g.dim_gh - node.dim);
    }
  }
}

TEST_CASE("simply connected generator agrees on shape") {
  Fixture fx(3, BuiltinFamily::sl_so);
  CHECK(fx.g.orbits.size() == 4);
  CHECK(fx.g.orbits[0].chars.size() == 4);
  CHECK(fx.g.dim_gh == 5);
}

TEST_CASE("generator input validation") {
  PairDatum p = builtin_pair(BuiltinFamily::psl_pso, 3);
  PairInvariants inv = derive_invariants(p);
  CHECK_THROWS_AS(generate_AI_orbits(p, inv, 4), ConfigError);  // rank mismatch
  RootDatum rd = build_root_datum('A', 2, LatticeMode::adjoint);
  PairDatum split{rd, identity_mat(2), "split", {}, {}};
  PairInvariants sinv = derive_invariants(split);
  CHECK_THROWS_AS(generate_AI_orbits(split, sinv, 3), ConfigError);
}

TEST_CASE("JSON round trip preserves the graph") {
  Fixture fx(4);
  nlohmann::ordered_json doc = orbit_graph_to_json(fx.g);
  OrbitGraph g2 = load_orbits(doc, fx.pair, fx.inv);
  REQUIRE(g2.orbits.size() == fx.g.orbits.size());
  for (std::size_t i = 0; i < g2.orbits.size(); ++i) {
    CHECK(g2.orbits[i].id == fx.g.orbits[i].id);
    CHECK(g2.orbits[i].dim == fx.g.orbits[i].dim);
    CHECK(g2.orbits[i].tau_star == fx.g.orbits[i].tau_star);
    CHECK(g2.orbits[i].XY == fx.g.orbits[i].XY);
    CHECK(g2.orbits[i].wy == fx.g.orbits[i].wy);
  }
  REQUIRE(g2.edges.size() == fx.g.edges.size());
  for (std::size_t i = 0; i < g2.edges.size(); ++i) {
    CHECK(g2.edges[i].lower == fx.g.edges[i].lower);
    CHECK(g2.edges[i].upper == fx.g.edges[i].upper);
    CHECK(g2.edges[i].alpha == fx.g.edges[i].alpha);
    CHECK(g2.edges[i].em_type == fx.g.edges[i].em_type);
  }
}

TEST_CASE("loader rejects corrupted documents") {
  Fixture fx(3);
  nlohmann::ordered_json good = orbit_graph_to_json(fx.g);

  SUBCASE("dimension gap") {
    nlohmann::ordered_json doc = good;
    for (auto& o : doc["orbits"])
      if (o["id"] == "(13)") o["dim"] = 2;
    CHECK_THROWS_AS(load_orbits(doc, fx.pair, fx.inv), ConfigError);
  }
  SUBCASE("U edge with unstable lattices") {
    nlohmann::ordered_json doc = good;
    for (auto& e : doc["edges"])
      if (e["em_type"] == "N") e["em_type"] = "U";
    CHECK_THROWS_AS(load_orbits(doc, fx.pair, fx.inv), ConfigError);
  }
  SUBCASE("G edges cannot link distinct orbits") {
    nlohmann::ordered_json doc = good;
    doc["edges"][0]["em_type"] = "G";
    CHECK_THROWS_AS(load_orbits(doc, fx.pair, fx.inv), ConfigError);
  }
  SUBCASE("dangling orbit reference") {
    nlohmann::ordered_json doc = good;
    doc["edges"][0]["upper"] = "(zz)";
    CHECK_THROWS_AS(load_orbits(doc, fx.pair, fx.inv), ConfigError);
  }
  SUBCASE("duplicate orbit id") {
    nlohmann::ordered_json doc = good;
    doc["orbits"].push_back(doc["orbits"][1]);
    CHECK_THROWS_AS(load_orbits(doc, fx.pair, fx.inv), ConfigError);
  }
  SUBCASE("missing keys") {
    nlohmann::ordered_json doc = good;
    doc["orbits"][0].erase("tau_star");
    CHECK_THROWS_AS(load_orbits(doc, fx.pair, fx.inv), ConfigError);
    CHECK_THROWS_AS(
        load_orbits(nlohmann::ordered_json::object(), fx.pair, fx.inv),
        ConfigError);
  }
  SUBCASE("unknown em_type string") {
    CHECK_THROWS_AS(em_type_from_string("Q"), ConfigError);
  }
  SUBCASE("the untouched document still loads") {
    CHECK_NOTHROW(load_orbits(good, fx.pair, fx.inv));
  }
}

TEST_CASE("validate_graph flags a flipped edge type") {
  Fixture fx(3);
  CHECK(validate_graph(fx.g, fx.pair, fx.inv).empty());
  OrbitGraph bad = fx.g;
  bad.edges[0].em_type =
      bad.edges[0].em_type == EmType::U ? EmType::N : EmType::U;
  CHECK_FALSE(validate_graph(bad, fx.pair, fx.inv).empty());
}

TEST_CASE("DOT export mentions every orbit") {
  Fixture fx(3);
  std::string dot = to_dot(fx.g, fx.inv);
  for (const OrbitNode& node : fx.g.orbits)
    CHECK(dot.find("\"" + node.id + "\"") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);
  std::vector<int> colors = {0, 1, 0, 1};
  std::string colored = to_dot(fx.g, fx.inv, &colors);
  CHECK(colored.find("fillcolor") != std::string::npos);
}
