#include "sphereblock/blocks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#ifdef SPHEREBLOCK_HAVE_OPENMP
#include <omp.h>
#endif

namespace sphereblock {

namespace {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

int transport_class(const PairInvariants& inv, const MonodromyClassTable& table,
                    const OrbitNode& node, const Mat& winv_mat,
                    const std::string& word, const Vec& lift) {
  Vec v = mat_vec(winv_mat, lift);
  if (!member(v, inv.K_circ))
    throw InternalError("transported weight escapes K_circ: orbit " + node.id +
                        ", w = " + word + ", lift = " + vec_str(lift));
  return class_of(table, restrict_to_C(inv, v));
}

}  // namespace

int assign_class_with(const OrbitGraph& g, const PairInvariants& inv,
                      const MonodromyClassTable& table, int orbit_index, int w,
                      const Vec& lift) {
  const OrbitNode& node = g.orbits[static_cast<std::size_t>(orbit_index)];
  Mat m = inv.W.matrix_of(inv.W.inverse[static_cast<std::size_t>(w)]);
  return transport_class(inv, table, node, m, inv.W.word_string(w), lift);
}

int assign_class(const OrbitGraph& g, const PairInvariants& inv,
                 const MonodromyClassTable& table, const std::string& orbit_id,
                 const Vec& chi) {
  int idx = g.index_of(orbit_id);
  if (idx < 0) throw ConfigError("unknown orbit id: " + orbit_id);
  const OrbitNode& node = g.orbits[static_cast<std::size_t>(idx)];
  if (std::find(node.chars.begin(), node.chars.end(), chi) == node.chars.end())
    throw ConfigError("chi is not a character of A_Y for orbit " + orbit_id);
  // canonical choices: lowest-index candidate (lexicographically least
  // reduced word) and the canonical torsion lift
  return assign_class_with(g, inv, table, idx, node.wy[0], node.A_Y.lift(chi));
}

BlockReport block_report(const OrbitGraph& g, const PairInvariants& inv,
                         const MonodromyClassTable& table) {
  struct Job {
    int orbit;
    std::size_t chi;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < g.orbits.size(); ++i)
    for (std::size_t c = 0; c < g.orbits[i].chars.size(); ++c)
      jobs.push_back({static_cast<int>(i), c});

  std::vector<int> cls(jobs.size());
  std::vector<Vec> lifts(jobs.size());
#ifdef SPHEREBLOCK_HAVE_OPENMP
  int cap = thread_cap();
  int nthreads = cap > 0 ? std::min(cap, omp_get_max_threads())
                         : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
#endif
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const OrbitNode& node = g.orbits[static_cast<std::size_t>(jobs[j].orbit)];
    lifts[j] = node.A_Y.lift(node.chars[jobs[j].chi]);
    cls[j] = assign_class_with(g, inv, table, jobs[j].orbit,
                               node.wy[0], lifts[j]);
  }

  BlockReport report;
  report.num_classes = table.classes.size();
  report.blocks.resize(report.num_classes);
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const OrbitNode& node = g.orbits[static_cast<std::size_t>(jobs[j].orbit)];
    report.blocks[static_cast<std::size_t>(cls[j])].push_back(
        IrreducibleLabel{node.id, node.chars[jobs[j].chi], lifts[j]});
  }
  report.totals.reserve(report.num_classes);
  for (const auto& b : report.blocks) report.totals.push_back(b.size());
  report.total = jobs.size();
  for (std::size_t k = 0; k < report.blocks.size(); ++k)
    if (report.blocks[k].empty())
      throw InternalError("monodromy class " + std::to_string(k) +
                          " received no irreducibles");
  return report;
}

std::vector<PathViolation> check_path_independence(
    const OrbitGraph& g, const PairInvariants& inv,
    const MonodromyClassTable& table, int window, std::size_t max_lifts,
    unsigned seed) {
  std::vector<std::vector<PathViolation>> per_orbit(g.orbits.size());

#ifdef SPHEREBLOCK_HAVE_OPENMP
  int cap = thread_cap();
  int nthreads = cap > 0 ? std::min(cap, omp_get_max_threads())
                         : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
  for (std::size_t oi = 0; oi < g.orbits.size(); ++oi) {
    const OrbitNode& node = g.orbits[oi];
    std::size_t k = node.XY_full.rank();
    std::size_t span = 2 * static_cast<std::size_t>(window) + 1;
    // number of window points, saturating at max_lifts
    std::size_t combos = 1;
    for (std::size_t i = 0; i < k && combos <= max_lifts; ++i) combos *= span;
    bool full = combos <= max_lifts;
    std::size_t tries = full ? combos : max_lifts;
    std::mt19937 rng(seed + static_cast<unsigned>(oi));
    std::uniform_int_distribution<int> coeff(-window, window);

    for (const Vec& chi : node.chars) {
      Vec base = node.A_Y.lift(chi);
      int expected = assign_class_with(g, inv, table,
                                       static_cast<int>(oi), node.wy[0], base);
      for (int w : node.wy) {
        Mat m = inv.W.matrix_of(inv.W.inverse[static_cast<std::size_t>(w)]);
        std::string word = inv.W.word_string(w);
        for (std::size_t t = 0; t < tries; ++t) {
          Vec lift = base;
          if (full) {
            std::size_t rem = t;
            for (std::size_t i = 0; i < k; ++i) {
              int c = static_cast<int>(rem % span) - window;
              rem /= span;
              if (c)
                for (std::size_t j = 0; j < lift.size(); ++j)
                  lift[j] += c * node.XY_full.basis[i][j];
            }
          } else {
            for (std::size_t i = 0; i < k; ++i) {
              int c = coeff(rng);
              if (c)
                for (std::size_t j = 0; j < lift.size(); ++j)
                  lift[j] += c * node.XY_full.basis[i][j];
            }
          }
          int got = transport_class(inv, table, node, m, word, lift);
          if (got != expected) {
            per_orbit[oi].push_back(
                PathViolation{node.id, chi, word, lift, got, expected});
            break;  // first violation per (chi, word) context
          }
        }
      }
    }
  }

  std::vector<PathViolation> out;
  for (auto& v : per_orbit)
    out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace sphereblock
