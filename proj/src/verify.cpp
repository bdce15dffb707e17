#include "sphereblock/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <unordered_map>

namespace sphereblock {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller index as the root
    parent[static_cast<std::size_t>(b)] = a;
  }
};

struct Ctx {
  PairDatum pair;
  PairInvariants inv;
};

Ctx make_ctx(BuiltinFamily f, int n) {
  Ctx c{builtin_pair(f, n), {}};
  c.inv = derive_invariants(c.pair);
  return c;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].str();
  return s + ")";
}

template <typename F>
CheckResult guarded(int number, const std::string& name, F body) {
  CheckResult r;
  r.number = number;
  r.name = name;
  r.pass = true;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += std::string("unexpected exception: ") + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

void append(CheckResult& r, const std::string& piece) {
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += piece;
}

void fail(CheckResult& r, const std::string& why) {
  r.pass = false;
  append(r, why);
}

// --- criterion 1: class counts and runtimes for psl_pso, n = 2..8 ----------

CheckResult check_class_counts(int max_n) {
  return guarded(1, "class counts (psl_pso, n=2..8)", [&](CheckResult& r) {
    const std::size_t expected[] = {0, 0, 1, 2, 3, 3, 3, 4, 5};
    for (int n = 2; n <= std::min(8, max_n); ++n) {
      auto t0 = std::chrono::steady_clock::now();
      Ctx ctx = make_ctx(BuiltinFamily::psl_pso, n);
      MonodromyClassTable table = class_table(ctx.inv);
      double dt = seconds_since(t0);
      double budget = n <= 6 ? 1.0 : 60.0;
      if (table.classes.size() != expected[n])
        fail(r, "n=" + std::to_string(n) + ": got " +
                    std::to_string(table.classes.size()) + " classes, want " +
                    std::to_string(expected[n]));
      if (dt > budget)
        fail(r, "n=" + std::to_string(n) + ": took " + fmt(dt) +
                    ", budget " + fmt(budget));
    }
    if (r.pass)
      append(r, "counts 1,2,3,3,3,4,5 up to n=" +
                    std::to_string(std::min(8, max_n)));
  });
}

// --- criterion 2: number of singleton blocks, psl_pso n = 2..6 -------------

CheckResult check_singleton_blocks(int max_n) {
  return guarded(2, "singleton blocks (psl_pso, n=2..6)", [&](CheckResult& r) {
    for (int n = 2; n <= std::min(6, max_n); ++n) {
      int expected = n % 4 == 2 ? 0 : (n % 2 == 1 ? 1 : 2);
      Ctx ctx = make_ctx(BuiltinFamily::psl_pso, n);
      OrbitGraph g = generate_AI_orbits(ctx.pair, ctx.inv, n);
      MonodromyClassTable table = class_table(ctx.inv);
      BlockReport report = block_report(g, ctx.inv, table);
      int singles = 0;
      for (std::size_t s : report.totals)
        if (s == 1) ++singles;
      if (singles != expected)
        fail(r, "n=" + std::to_string(n) + ": " + std::to_string(singles) +
                    " singleton blocks, want " + std::to_string(expected));
      else
        append(r, "n=" + std::to_string(n) + ":" + std::to_string(singles));
    }
  });
}

// --- criterion 3: the rank-two worked example ------------------------------

CheckResult check_rank_two_example(int max_n) {
  return guarded(3, "pgl_po n=3 decomposition", [&](CheckResult& r) {
    if (max_n < 3) {
      append(r, "skipped (max_n < 3)");
      return;
    }
    auto t0 = std::chrono::steady_clock::now();
    Ctx ctx = make_ctx(BuiltinFamily::pgl_po, 3);
    OrbitGraph g = generate_AI_orbits(ctx.pair, ctx.inv, 3);
    MonodromyClassTable table = class_table(ctx.inv);
    BlockReport report = block_report(g, ctx.inv, table);
    double dt = seconds_since(t0);
    if (g.orbits.size() != 4)
      fail(r, std::to_string(g.orbits.size()) + " orbits, want 4");
    if (report.total != 7)
      fail(r, std::to_string(report.total) + " irreducibles, want 7");
    std::vector<std::size_t> sizes = report.totals;
    std::sort(sizes.rbegin(), sizes.rend());
    if (sizes != std::vector<std::size_t>{6, 1})
      fail(r, "block sizes are not {6,1}");
    if (dt > 1.0) fail(r, "took " + fmt(dt) + ", budget 1.00s");
    if (r.pass) append(r, "4 orbits, 7 irreducibles, blocks {6,1}");
  });
}

// --- criterion 4: path independence sweep ----------------------------------

CheckResult check_path_sweep(int max_n) {
  return guarded(4, "path independence (psl_pso & pgl_po, n=2..5, window 3)",
                 [&](CheckResult& r) {
    std::size_t contexts = 0;
    for (BuiltinFamily f : {BuiltinFamily::psl_pso, BuiltinFamily::pgl_po}) {
      for (int n = 2; n <= std::min(5, max_n); ++n) {
        Ctx ctx = make_ctx(f, n);
        OrbitGraph g = generate_AI_orbits(ctx.pair, ctx.inv, n);
        MonodromyClassTable table = class_table(ctx.inv);
        std::vector<PathViolation> v =
            check_path_independence(g, ctx.inv, table, 3);
        for (const OrbitNode& node : g.orbits)
          contexts += node.chars.size() * node.wy.size();
        if (!v.empty()) {
          fail(r, to_string(f) + " n=" + std::to_string(n) + ": " +
                      std::to_string(v.size()) + " violations, first at orbit " +
                      v[0].orbit_id + ", word " + v[0].word + ", lift " +
                      vec_str(v[0].lift));
        }
      }
    }
    if (r.pass)
      append(r, "0 violations over " + std::to_string(contexts) +
                    " (orbit, chi, word) contexts");
  });
}

// --- criterion 5: oracle agreement ------------------------------------------

CheckResult check_oracle_agreement(int max_n) {
  return guarded(5, "window-oracle partition agreement (all builtins, n=2..5)",
                 [&](CheckResult& r) {
    int pairs = 0;
    for (BuiltinFamily f : {BuiltinFamily::sl_so, BuiltinFamily::psl_pso,
                            BuiltinFamily::pgl_po}) {
      for (int n = 2; n <= std::min(5, max_n); ++n) {
        Ctx ctx = make_ctx(f, n);
        MonodromyClassTable table = class_table(ctx.inv);
        std::vector<std::vector<int>> oracle = oracle_partition(ctx.inv, 3);
        if (oracle != table.classes)
          fail(r, to_string(f) + " n=" + std::to_string(n) +
                      ": oracle partition has " + std::to_string(oracle.size()) +
                      " classes, engine has " +
                      std::to_string(table.classes.size()) +
                      (oracle.size() == table.classes.size()
                           ? " (same count, different blocks)"
                           : ""));
        ++pairs;
      }
    }
    if (r.pass)
      append(r, "partitions identical for " + std::to_string(pairs) +
                    " pair instances");
  });
}

// --- criterion 6: randomized lattice algebra --------------------------------

CheckResult check_lattice_randomized() {
  return guarded(6, "randomized lattice algebra (1000 SNF, 500 saturation)",
                 [&](CheckResult& r) {
    std::mt19937 rng(986543);
    auto pick = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int checked = 0;
    for (int t = 0; t < 1000 && r.pass; ++t) {
      std::size_t nr = static_cast<std::size_t>(pick(1, 6));
      std::size_t nc = static_cast<std::size_t>(pick(1, 6));
      Mat m(nr, Vec(nc));
      for (Vec& row : m)
        for (Int& x : row) x = pick(-20, 20);
      SmithResult s = smith_normal_form(m);
      std::string tag = "SNF case " + std::to_string(t);
      if (s.D != mat_mul(mat_mul(s.U, m), s.V))
        fail(r, tag + ": D != U*M*V");
      for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (s.diag[i] < 0) fail(r, tag + ": negative invariant factor");
        if (i + 1 < s.diag.size() && s.diag[i] != 0 &&
            s.diag[i + 1] % s.diag[i] != 0)
          fail(r, tag + ": divisibility chain broken at " + s.diag[i].str() +
                      " | " + s.diag[i + 1].str());
        if (s.diag[i] == 0 && i + 1 < s.diag.size() && s.diag[i + 1] != 0)
          fail(r, tag + ": zero before nonzero factor");
      }
      Int du = determinant(s.U), dv = determinant(s.V);
      if (du != 1 && du != -1) fail(r, tag + ": det U = " + du.str());
      if (dv != 1 && dv != -1) fail(r, tag + ": det V = " + dv.str());
      if (mat_mul(s.V, s.Vinv) != identity_mat(nc))
        fail(r, tag + ": V * Vinv != I");
      if (nr == nc) {
        Int dm = determinant(m);
        if (dm < 0) dm = -dm;
        Int prod = 1;
        for (const Int& d : s.diag) prod *= d;
        if (prod < 0) prod = -prod;
        if (dm != prod)
          fail(r, tag + ": |det M| = " + dm.str() +
                      " but product of factors = " + prod.str());
      }
      ++checked;
    }
    int saturations = 0;
    for (int t = 0; t < 500 && r.pass; ++t) {
      std::size_t amb = static_cast<std::size_t>(pick(1, 5));
      std::size_t nr = static_cast<std::size_t>(pick(0, static_cast<int>(amb) + 1));
      Mat rows(nr, Vec(amb));
      for (Vec& row : rows)
        for (Int& x : row) x = pick(-9, 9);
      Sublattice l = Sublattice::from_rows(amb, rows);
      Sublattice s = saturation(l);
      std::string tag = "saturation case " + std::to_string(t);
      if (saturation(s) != s) fail(r, tag + ": not idempotent");
      if (s.rank() != l.rank()) fail(r, tag + ": rank changed");
      for (const Vec& row : l.basis)
        if (!member(row, s)) fail(r, tag + ": saturation lost a generator");
      for (const Int& f : quotient(amb, s).factors)
        if (f != 0) fail(r, tag + ": quotient by saturation has torsion");
      ++saturations;
    }
    if (r.pass)
      append(r, std::to_string(checked) + " SNF cases, " +
                    std::to_string(saturations) + " saturation cases");
  });
}

// --- criterion 7: structural invariants --------------------------------------

CheckResult check_structural(int max_n) {
  return guarded(7, "structural invariants (graphs, candidates, negation)",
                 [&](CheckResult& r) {
    int graphs = 0;
    for (BuiltinFamily f : {BuiltinFamily::psl_pso, BuiltinFamily::sl_so}) {
      for (int n = 2; n <= std::min(6, max_n); ++n) {
        std::string tag = to_string(f) + " n=" + std::to_string(n);
        Ctx ctx = make_ctx(f, n);
        OrbitGraph g = generate_AI_orbits(ctx.pair, ctx.inv, n);
        maybe_inject_fault(g);
        std::vector<std::string> problems = validate_graph(g, ctx.pair, ctx.inv);
        for (std::size_t i = 0; i < problems.size() && i < 3; ++i)
          fail(r, tag + ": " + problems[i]);
        if (!r.pass) return;
        MonodromyClassTable table = class_table(ctx.inv);
        BlockReport report = block_report(g, ctx.inv, table);
        std::size_t expected_total = 0;
        for (const OrbitNode& node : g.orbits)
          expected_total += node.chars.size();
        if (report.total != expected_total)
          fail(r, tag + ": blocks do not partition the irreducibles");
        for (std::size_t k = 0; k < table.neg_map.size(); ++k) {
          std::size_t nk = static_cast<std::size_t>(table.neg_map[k]);
          if (static_cast<std::size_t>(table.neg_map[nk]) != k)
            fail(r, tag + ": negation map is not an involution");
          if (report.totals[k] != report.totals[nk])
            fail(r, tag + ": negation sends a block of size " +
                        std::to_string(report.totals[k]) +
                        " to one of size " + std::to_string(report.totals[nk]));
        }
        ++graphs;
      }
    }
    if (r.pass)
      append(r, std::to_string(graphs) +
                    " generated graphs re-validated, negation symmetric");
  });
}

}  // namespace

void maybe_inject_fault(OrbitGraph& g) {
  const char* f = std::getenv("SPHEREBLOCK_FAULT");
  if (!f || std::string(f) != "flip_edge_type" || g.edges.empty()) return;
  OrbitEdge& e = g.edges[0];
  e.em_type = e.em_type == EmType::U ? EmType::N : EmType::U;
}

std::vector<std::vector<int>> oracle_partition(const PairInvariants& inv,
                                               int window) {
  const RootDatum& rd = inv.datum;
  std::size_t m = inv.C_chars.size();
  std::size_t k = inv.K_full.rank();
  std::size_t span = static_cast<std::size_t>(2 * window + 1);

  auto key_of = [](const Vec& v) {
    std::string s;
    s.reserve(v.size() * sizeof(long long));
    for (const Int& x : v) {
      long long ll = static_cast<long long>(x);
      s.append(reinterpret_cast<const char*>(&ll), sizeof(long long));
    }
    return s;
  };

  // Every windowed lift of every character, indexed for exact lookup.
  std::unordered_map<std::string, int> owner;
  std::vector<std::vector<Vec>> lifts(m);
  std::vector<int> counter(k, 0);
  for (std::size_t c = 0; c < m; ++c) {
    std::fill(counter.begin(), counter.end(), 0);
    while (true) {
      Vec v = inv.C_lifts[c];
      for (std::size_t i = 0; i < k; ++i) {
        Int coeff = counter[i] - window;
        if (coeff != 0)
          for (std::size_t j = 0; j < v.size(); ++j)
            v[j] += coeff * inv.K_full.basis[i][j];
      }
      std::string key = key_of(v);
      auto [it, fresh] = owner.emplace(key, static_cast<int>(c));
      if (!fresh && it->second != static_cast<int>(c))
        throw InternalError("oracle: two characters share a lift");
      lifts[c].push_back(std::move(v));
      std::size_t i = 0;
      while (i < k && ++counter[i] == static_cast<int>(span)) counter[i++] = 0;
      if (i == k) break;
      if (k == 0) break;
    }
  }

  Dsu dsu(m);
  for (int w : inv.W0) {
    Mat mw = inv.W.matrix_of(w);
    Vec shift = rho_shift(rd, mw);
    for (std::size_t c = 0; c < m; ++c) {
      for (const Vec& v : lifts[c]) {
        Vec img = mat_vec(mw, v);
        auto hit = owner.find(key_of(vec_add(img, shift)));
        if (hit != owner.end()) dsu.unite(static_cast<int>(c), hit->second);
        hit = owner.find(key_of(vec_sub(img, shift)));
        if (hit != owner.end()) dsu.unite(static_cast<int>(c), hit->second);
      }
    }
  }

  std::vector<std::vector<int>> classes;
  std::vector<int> root_to_class(m, -1);
  for (std::size_t c = 0; c < m; ++c) {
    int root = dsu.find(static_cast<int>(c));
    if (root_to_class[static_cast<std::size_t>(root)] < 0) {
      root_to_class[static_cast<std::size_t>(root)] =
          static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(
                root_to_class[static_cast<std::size_t>(root)])]
        .push_back(static_cast<int>(c));
  }
  return classes;
}

std::vector<CheckResult> run_acceptance(int max_n) {
  if (max_n < 2) max_n = 2;
  if (max_n > 9) max_n = 9;
  std::vector<CheckResult> out;
  out.push_back(check_class_counts(max_n));
  out.push_back(check_singleton_blocks(max_n));
  out.push_back(check_rank_two_example(max_n));
  out.push_back(check_path_sweep(max_n));
  out.push_back(check_oracle_agreement(max_n));
  out.push_back(check_lattice_randomized());
  out.push_back(check_structural(max_n));
  return out;
}

bool all_passed(const std::vector<CheckResult>& rs) {
  for (const CheckResult& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace sphereblock
