#include "sphereblock/orbitgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sphereblock {

EmType em_type_from_string(const std::string& s) {
  if (s == "G") return EmType::G;
  if (s == "U") return EmType::U;
  if (s == "T") return EmType::T;
  if (s == "N") return EmType::N;
  throw ConfigError("unknown em_type: " + s);
}

std::string to_string(EmType t) {
  switch (t) {
    case EmType::G: return "G";
    case EmType::U: return "U";
    case EmType::T: return "T";
    case EmType::N: return "N";
  }
  return "?";
}

int OrbitGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].id == id) return static_cast<int>(i);
  return -1;
}

namespace {

std::string lattice_str(const Sublattice& l) {
  std::ostringstream os;
  os << "{";
  for (std::size_t r = 0; r < l.basis.size(); ++r) {
    os << (r ? " " : "") << "(";
    for (std::size_t i = 0; i < l.basis[r].size(); ++i)
      os << (i ? "," : "") << l.basis[r][i];
    os << ")";
  }
  os << "}";
  return os.str();
}

bool em_T_holds(const Sublattice& a, const Sublattice& b) {
  const Sublattice *big = nullptr, *small = nullptr;
  if (a.rank() == b.rank() + 1) { big = &a; small = &b; }
  else if (b.rank() == a.rank() + 1) { big = &b; small = &a; }
  else return false;
  for (const Vec& row : small->basis)
    if (!member(row, *big)) return false;
  return quotient_pair(*big, *small).factors == std::vector<Int>{0};
}

}  // namespace

std::vector<std::string> validate_graph(const OrbitGraph& g,
                                        const PairDatum& pair,
                                        const PairInvariants& inv) {
  const RootDatum& rd = pair.datum;
  int r = rd.rank;
  std::vector<std::string> problems;
  auto bad = [&](const std::string& msg) { problems.push_back(msg); };

  if (g.orbits.empty()) {
    bad("no orbits");
    return problems;
  }
  std::set<std::string> ids;
  for (const OrbitNode& node : g.orbits)
    if (!ids.insert(node.id).second) bad("duplicate orbit id " + node.id);

  for (const OrbitNode& node : g.orbits) {
    if (node.tau_star.size() != static_cast<std::size_t>(r) ||
        node.tau_star[0].size() != static_cast<std::size_t>(r)) {
      bad("orbit " + node.id + ": tau_star has wrong dimensions");
      continue;
    }
    if (mat_mul(node.tau_star, node.tau_star) != identity_mat(r))
      bad("orbit " + node.id + ": tau_star is not an involution");
    if (node.dim > g.dim_gh)
      bad("orbit " + node.id + ": dim exceeds dim G/H");
  }
  const OrbitNode& open = g.orbits[static_cast<std::size_t>(g.open_orbit)];
  if (open.dim != g.dim_gh)
    bad("open orbit " + open.id + " has dim != dim G/H");
  for (const OrbitNode& node : g.orbits)
    if (&node != &open && node.dim >= g.dim_gh)
      bad("open orbit (maximal dimension) is not unique: " + node.id);
  if (open.tau_star != pair.theta_star)
    bad("open orbit " + open.id + " has tau_star != theta_star");

  std::vector<bool> has_up(g.orbits.size(), false);
  for (const OrbitEdge& e : g.edges) {
    const OrbitNode& lo = g.orbits[static_cast<std::size_t>(e.lower)];
    const OrbitNode& up = g.orbits[static_cast<std::size_t>(e.upper)];
    has_up[static_cast<std::size_t>(e.lower)] = true;
    std::string where = "edge " + lo.id + " -> " + up.id + " (alpha " +
                        std::to_string(e.alpha + 1) + ")";
    if (e.alpha < 0 || e.alpha >= r) {
      bad(where + ": simple index out of range");
      continue;
    }
    if (up.dim != lo.dim + 1) {
      bad(where + ": dim(upper) = " + std::to_string(up.dim) +
          " != dim(lower) + 1 = " + std::to_string(lo.dim + 1));
      continue;
    }
    const Mat& s = rd.refl[static_cast<std::size_t>(e.alpha)];
    auto dump = [&] {
      return "; X*(lower) = " + lattice_str(lo.XY) +
             ", X*(upper) = " + lattice_str(up.XY);
    };
    switch (e.em_type) {
      case EmType::G:
        bad(where + ": type G cannot link two distinct orbits");
        break;
      case EmType::U:
        if (transform(s, lo.XY) != up.XY)
          bad(where + ": type U but X*(upper) != s_a X*(lower)" + dump());
        break;
      case EmType::T:
        if (!em_T_holds(up.XY, lo.XY))
          bad(where + ": type T but X*(big)/X*(small) is not Z" + dump());
        break;
      case EmType::N:
        if (transform(s, up.XY) != up.XY || transform(s, lo.XY) != lo.XY)
          bad(where + ": type N but a lattice is not s_a-stable" + dump());
        break;
    }
  }
  for (std::size_t i = 0; i < g.orbits.size(); ++i)
    if (static_cast<int>(i) != g.open_orbit && !has_up[i])
      bad("orbit " + g.orbits[i].id + " has no raising edge");

  for (const OrbitNode& node : g.orbits) {
    if (node.wy.empty()) {
      bad("orbit " + node.id + " is unreachable from the open orbit");
      continue;
    }
    int codim = g.dim_gh - node.dim;
    for (int c : node.wy)
      if (inv.W.lengths[static_cast<std::size_t>(c)] != codim)
        bad("orbit " + node.id + ": candidate " + inv.W.word_string(c) +
            " has length != codim " + std::to_string(codim));
  }
  if (!open.wy.empty() && open.wy != std::vector<int>{0})
    bad("open orbit candidate set is not {e}");
  return problems;
}

namespace {

using Perm = std::vector<int>;  // one-line form, 0-based

int inversions(const Perm& p) {
  int n = static_cast<int>(p.size()), inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

int two_cycles(const Perm& p) {
  int c = 0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] > i) ++c;
  return c;
}

std::string cycle_id(const Perm& p) {
  std::string s;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] > i)
      s += "(" + std::to_string(i + 1) + std::to_string(p[i] + 1) + ")";
  return s.empty() ? "e" : s;
}

void involutions_rec(int n, Perm& cur, std::vector<Perm>& out) {
  int i = 0;
  while (i < n && cur[i] != -1) ++i;
  if (i == n) {
    out.push_back(cur);
    return;
  }
  cur[i] = i;
  involutions_rec(n, cur, out);
  for (int j = i + 1; j < n; ++j) {
    if (cur[j] != -1) continue;
    cur[i] = j;
    cur[j] = i;
    involutions_rec(n, cur, out);
    cur[j] = -1;
  }
  cur[i] = -1;
}

std::vector<Perm> involutions(int n) {
  std::vector<Perm> out;
  Perm cur(n, -1);
  involutions_rec(n, cur, out);
  return out;
}

// Matrix of the permutation action on X*(T) for type A_{n-1}, in
// simple-root (adjoint) or fundamental-weight (simply connected) coordinates.
Mat perm_matrix(const Perm& p, LatticeMode mode) {
  int n = static_cast<int>(p.size()), r = n - 1;
  Mat m(r, Vec(r, 0));
  if (mode == LatticeMode::adjoint) {
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i)
        m[j][i] = (p[i] <= j ? 1 : 0) - (p[i + 1] <= j ? 1 : 0);
  } else {
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) {
        Int v = 0;
        for (int i = 0; i <= j; ++i)
          v += (p[i] == k ? 1 : 0) - (p[i] == k + 1 ? 1 : 0);
        m[k][j] = v;
      }
  }
  return m;
}

struct RawEdge {
  std::string lower, upper;
  int alpha;
  EmType em_type;
  bool em_known;  // false: resolve T vs N from the lattice tests
};

// Shared construction pass.  `loaded` selects ConfigError (bad input data)
// versus InternalError (a broken generator guarantee).
OrbitGraph finalize_graph(std::vector<OrbitNode> nodes,
                          std::vector<RawEdge> raw_edges,
                          const PairDatum& pair, const PairInvariants& inv,
                          int forced_dim_gh, bool loaded) {
  const RootDatum& rd = pair.datum;
  int r = rd.rank;
  auto fail = [&](const std::string& msg) -> void {
    if (loaded) throw ConfigError("orbit data invalid: " + msg);
    throw InternalError("orbit generator check failed: " + msg);
  };
  if (nodes.empty()) fail("no orbits");

  // Derived per-node data.
  for (OrbitNode& node : nodes) {
    if (node.tau_star.size() != static_cast<std::size_t>(r))
      fail("orbit " + node.id + ": tau_star has wrong dimensions");
    for (const Vec& row : node.tau_star)
      if (row.size() != static_cast<std::size_t>(r))
        fail("orbit " + node.id + ": tau_star has wrong dimensions");
    Mat rows(r, Vec(r));
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i)
        rows[j][i] = (i == j ? 1 : 0) - node.tau_star[i][j];
    node.XY_full = Sublattice::from_rows(r, rows);
    node.XY = saturation(node.XY_full);
    node.A_Y = quotient(r, node.XY_full);
    node.chars = characters(node.A_Y);
  }

  // Canonical order; open orbit = unique maximal dimension.
  std::sort(nodes.begin(), nodes.end(),
            [](const OrbitNode& a, const OrbitNode& b) {
              if (a.dim != b.dim) return a.dim > b.dim;
              return a.id < b.id;
            });
  OrbitGraph g;
  g.orbits = std::move(nodes);
  g.open_orbit = 0;
  g.dim_gh = forced_dim_gh >= 0 ? forced_dim_gh : g.orbits[0].dim;

  // Resolve edge endpoints; classify T vs N where requested.
  for (const RawEdge& e : raw_edges) {
    OrbitEdge edge;
    edge.lower = g.index_of(e.lower);
    edge.upper = g.index_of(e.upper);
    if (edge.lower < 0 || edge.upper < 0)
      fail("edge references unknown orbit id " +
           (edge.lower < 0 ? e.lower : e.upper));
    if (e.alpha < 0 || e.alpha >= r)
      fail("edge " + e.lower + " -> " + e.upper +
           ": simple index out of range");
    edge.alpha = e.alpha;
    if (e.em_known) {
      edge.em_type = e.em_type;
    } else {
      const OrbitNode& lo = g.orbits[static_cast<std::size_t>(edge.lower)];
      const OrbitNode& up = g.orbits[static_cast<std::size_t>(edge.upper)];
      const Mat& s = rd.refl[static_cast<std::size_t>(e.alpha)];
      if (transform(s, up.XY) == up.XY && transform(s, lo.XY) == lo.XY)
        edge.em_type = EmType::N;
      else if (em_T_holds(up.XY, lo.XY))
        edge.em_type = EmType::T;
      else
        fail("edge " + lo.id + " -> " + up.id +
             ": neither N nor T lattice test holds");
    }
    g.edges.push_back(edge);
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [&](const OrbitEdge& a, const OrbitEdge& b) {
              const std::string& la = g.orbits[static_cast<std::size_t>(a.lower)].id;
              const std::string& lb = g.orbits[static_cast<std::size_t>(b.lower)].id;
              if (la != lb) return la < lb;
              if (a.alpha != b.alpha) return a.alpha < b.alpha;
              return g.orbits[static_cast<std::size_t>(a.upper)].id <
                     g.orbits[static_cast<std::size_t>(b.upper)].id;
            });

  // WY_words: walk down from the open orbit, appending s_alpha on the left.
  // Orbits are sorted by descending dim, so a single pass suffices.
  std::vector<std::set<int>> cand(g.orbits.size());
  cand[static_cast<std::size_t>(g.open_orbit)].insert(0);
  for (std::size_t u = 0; u < g.orbits.size(); ++u)
    for (const OrbitEdge& e : g.edges)
      if (e.upper == static_cast<int>(u))
        for (int c : cand[u])
          cand[static_cast<std::size_t>(e.lower)].insert(
              inv.W.mul_left(e.alpha, c));
  for (std::size_t i = 0; i < g.orbits.size(); ++i)
    g.orbits[i].wy.assign(cand[i].begin(), cand[i].end());

  std::vector<std::string> problems = validate_graph(g, pair, inv);
  if (!problems.empty()) fail(problems.front());
  return g;
}

}  // namespace

OrbitGraph generate_AI_orbits(const PairDatum& pair, const PairInvariants& inv,
                              int n) {
  const RootDatum& rd = pair.datum;
  if (rd.cartan_type != 'A' || rd.rank != n - 1)
    throw ConfigError("A I generator needs an A_{n-1} pair matching n");
  Mat minus = identity_mat(static_cast<std::size_t>(rd.rank));
  for (int i = 0; i < rd.rank; ++i) minus[i][i] = -1;
  if (pair.theta_star != minus)
    throw ConfigError("A I generator needs theta_star = -identity");

  int dim_gh = (n - 1) * (n + 2) / 2;
  std::vector<OrbitNode> nodes;
  std::map<std::string, Perm> by_id;
  for (const Perm& p : involutions(n)) {
    OrbitNode node;
    node.id = cycle_id(p);
    Mat pm = perm_matrix(p, rd.mode);
    if (inv.W.find(pm) < 0)
      throw InternalError("permutation matrix not found in the Weyl group");
    node.tau_star = Mat(static_cast<std::size_t>(rd.rank),
                        Vec(static_cast<std::size_t>(rd.rank)));
    for (int i = 0; i < rd.rank; ++i)
      for (int j = 0; j < rd.rank; ++j) node.tau_star[i][j] = -pm[i][j];
    node.dim = dim_gh - (inversions(p) + two_cycles(p)) / 2;
    by_id[node.id] = p;
    nodes.push_back(std::move(node));
  }

  std::vector<RawEdge> edges;
  for (const auto& [id, p] : by_id) {
    int len = inversions(p);
    for (int a = 0; a + 1 < n; ++a) {
      Perm sps = p;  // s p s: swap positions a, a+1 and values a, a+1
      std::swap(sps[a], sps[a + 1]);
      for (int& x : sps)
        if (x == a) x = a + 1;
        else if (x == a + 1) x = a;
      if (sps == p) {
        // s and p commute: sp = ps is an involution one step away.
        Perm sp = p;
        for (int& x : sp)
          if (x == a) x = a + 1;
          else if (x == a + 1) x = a;
        if (inversions(sp) < len)
          edges.push_back({id, cycle_id(sp), a, EmType::U, false});
      } else if (inversions(sps) < len) {
        edges.push_back({id, cycle_id(sps), a, EmType::U, true});
      }
    }
  }
  return finalize_graph(std::move(nodes), std::move(edges), pair, inv, dim_gh,
                        false);
}

OrbitGraph load_orbits(const nlohmann::ordered_json& doc, const PairDatum& pair,
                       const PairInvariants& inv) {
  if (!doc.is_object() || !doc.contains("orbits") || !doc.contains("edges"))
    throw ConfigError("orbit document must contain \"orbits\" and \"edges\"");
  std::vector<OrbitNode> nodes;
  for (const auto& item : doc.at("orbits")) {
    if (!item.contains("id") || !item.contains("tau_star") ||
        !item.contains("dim"))
      throw ConfigError("orbit entry needs id, tau_star, dim");
    OrbitNode node;
    node.id = item.at("id").get<std::string>();
    node.dim = item.at("dim").get<int>();
    for (const auto& row : item.at("tau_star")) {
      Vec v;
      for (const auto& x : row) v.push_back(Int(x.get<long long>()));
      node.tau_star.push_back(v);
    }
    nodes.push_back(std::move(node));
  }
  std::vector<RawEdge> edges;
  for (const auto& item : doc.at("edges")) {
    if (!item.contains("lower") || !item.contains("upper") ||
        !item.contains("alpha") || !item.contains("em_type"))
      throw ConfigError("edge entry needs lower, upper, alpha, em_type");
    RawEdge e;
    e.lower = item.at("lower").get<std::string>();
    e.upper = item.at("upper").get<std::string>();
    e.alpha = item.at("alpha").get<int>() - 1;  // 1-based in JSON
    e.em_type = em_type_from_string(item.at("em_type").get<std::string>());
    e.em_known = true;
    edges.push_back(std::move(e));
  }
  return finalize_graph(std::move(nodes), std::move(edges), pair, inv, -1,
                        true);
}

nlohmann::ordered_json orbit_graph_to_json(const OrbitGraph& g) {
  nlohmann::ordered_json doc;
  doc["orbits"] = nlohmann::ordered_json::array();
  for (const OrbitNode& node : g.orbits) {
    nlohmann::ordered_json o;
    o["id"] = node.id;
    nlohmann::ordered_json tau = nlohmann::ordered_json::array();
    for (const Vec& row : node.tau_star) {
      nlohmann::ordered_json jr = nlohmann::ordered_json::array();
      for (const Int& x : row) jr.push_back(static_cast<long long>(x));
      tau.push_back(jr);
    }
    o["tau_star"] = tau;
    o["dim"] = node.dim;
    doc["orbits"].push_back(o);
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const OrbitEdge& e : g.edges) {
    nlohmann::ordered_json o;
    o["lower"] = g.orbits[static_cast<std::size_t>(e.lower)].id;
    o["upper"] = g.orbits[static_cast<std::size_t>(e.upper)].id;
    o["alpha"] = e.alpha + 1;
    o["em_type"] = to_string(e.em_type);
    doc["edges"].push_back(o);
  }
  return doc;
}

const std::vector<int>& wY_candidates(const OrbitGraph& g,
                                      const std::string& orbit_id) {
  int idx = g.index_of(orbit_id);
  if (idx < 0) throw ConfigError("unknown orbit id: " + orbit_id);
  return g.orbits[static_cast<std::size_t>(idx)].wy;
}

std::string to_dot(const OrbitGraph& g, const PairInvariants& inv,
                   const std::vector<int>* node_class) {
  (void)inv;
  static const char* palette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                  "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
                                  "#e31a1c", "#ff7f00"};
  std::ostringstream os;
  os << "digraph orbits {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.orbits.size(); ++i) {
    const OrbitNode& node = g.orbits[i];
    os << "  \"" << node.id << "\" [label=\"" << node.id << "\\ndim "
       << node.dim << "\\n|A|=" << node.chars.size() << "\"";
    if (node_class)
      os << ", style=filled, fillcolor=\""
         << palette[static_cast<std::size_t>((*node_class)[i]) % 10] << "\"";
    os << "];\n";
  }
  for (const OrbitEdge& e : g.edges)
    os << "  \"" << g.orbits[static_cast<std::size_t>(e.lower)].id
       << "\" -> \"" << g.orbits[static_cast<std::size_t>(e.upper)].id
       << "\" [label=\"α" << e.alpha + 1 << " / " << to_string(e.em_type)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sphereblock
