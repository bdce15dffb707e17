#include "sphereblock/monodromy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef SPHEREBLOCK_HAVE_OPENMP
#include <omp.h>
#endif

namespace sphereblock {

namespace {

// Union-find with union-by-minimum: the root of a component is always its
// smallest member, making labels order-independent.
struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) {
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) {
      p[static_cast<std::size_t>(x)] =
          p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
      x = p[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) p[static_cast<std::size_t>(b)] = a;
    else p[static_cast<std::size_t>(a)] = b;
  }
};

std::string basis_key(const Mat& basis) {
  std::ostringstream os;
  for (const Vec& row : basis) {
    for (const Int& x : row) os << x << ',';
    os << ';';
  }
  return os.str();
}

std::string residue_key(const Vec& v) {
  std::ostringstream os;
  for (const Int& x : v) os << x << ',';
  return os.str();
}

int resolved_threads() {
#ifdef SPHEREBLOCK_HAVE_OPENMP
  int cap = thread_cap();
  int avail = omp_get_max_threads();
  return cap > 0 ? std::min(cap, avail) : avail;
#else
  return 1;
#endif
}

MonodromyClassTable table_from_partition(const PairInvariants& inv, Dsu& all,
                                         bool dot_ddot_differ) {
  std::size_t m = inv.C_chars.size();
  MonodromyClassTable t;
  t.chars = inv.C_chars;
  t.dot_ddot_differ = dot_ddot_differ;
  t.class_of_char.assign(m, -1);
  std::map<int, std::vector<int>> by_root;
  for (std::size_t i = 0; i < m; ++i)
    by_root[all.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (auto& [root, members] : by_root) {
    int id = static_cast<int>(t.classes.size());
    for (int c : members) t.class_of_char[static_cast<std::size_t>(c)] = id;
    // classes are keyed by smallest member; the character list is in
    // ascending mixed-radix order, so members.front() is the lex-least tuple
    t.representatives.push_back(inv.C_chars[static_cast<std::size_t>(root)]);
    t.classes.push_back(std::move(members));
  }
  // The (-1) involution, with the well-definedness guarantee checked.
  t.neg_map.assign(t.classes.size(), -1);
  for (std::size_t k = 0; k < t.classes.size(); ++k) {
    int target = -1;
    for (int c : t.classes[k]) {
      int nc = inv.char_index(inv.neg_char(inv.C_chars[static_cast<std::size_t>(c)]));
      if (nc < 0) throw InternalError("negated character not in X*(C)");
      int cls = t.class_of_char[static_cast<std::size_t>(nc)];
      if (target == -1) target = cls;
      else if (target != cls)
        throw InternalError("(-1) does not send a class to a single class");
    }
    t.neg_map[k] = target;
  }
  for (std::size_t k = 0; k < t.classes.size(); ++k)
    if (t.neg_map[static_cast<std::size_t>(t.neg_map[k])] != static_cast<int>(k))
      throw InternalError("neg_map is not an involution");
  return t;
}

}  // namespace

bool related(const PairInvariants& inv, const Vec& c1, const Vec& c2) {
  int i1 = inv.char_index(c1), i2 = inv.char_index(c2);
  if (i1 < 0 || i2 < 0) throw ConfigError("character does not belong to X*(C)");
  const Vec& l1 = inv.C_lifts[static_cast<std::size_t>(i1)];
  const Vec& l2 = inv.C_lifts[static_cast<std::size_t>(i2)];
  for (int w : inv.W0) {
    Mat m = inv.W.matrix_of(w);
    Sublattice s = join(inv.K_full, transform(m, inv.K_full));
    if (member(vec_sub(dot_act(inv.datum, m, l2), l1), s)) return true;
    if (member(vec_sub(ddot_act(inv.datum, m, l2), l1), s)) return true;
  }
  return false;
}

MonodromyClassTable class_table_serial(const PairInvariants& inv) {
  std::size_t m = inv.C_chars.size();
  Dsu all(m), dot_only(m), ddot_only(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      // literal pairwise relation; closure comes from the union-find
      const Vec& l1 = inv.C_lifts[i];
      const Vec& l2 = inv.C_lifts[j];
      for (int w : inv.W0) {
        Mat mw = inv.W.matrix_of(w);
        Sublattice s = join(inv.K_full, transform(mw, inv.K_full));
        bool d = member(vec_sub(dot_act(inv.datum, mw, l2), l1), s);
        bool dd = member(vec_sub(ddot_act(inv.datum, mw, l2), l1), s);
        int a = static_cast<int>(i), b = static_cast<int>(j);
        if (d) dot_only.unite(a, b);
        if (dd) ddot_only.unite(a, b);
        if (d || dd) all.unite(a, b);
      }
    }
  bool differ = false;
  for (std::size_t i = 0; i < m && !differ; ++i)
    differ = dot_only.find(static_cast<int>(i)) !=
             ddot_only.find(static_cast<int>(i));
  return table_from_partition(inv, all, differ);
}

MonodromyClassTable class_table(const PairInvariants& inv) {
  std::size_t m = inv.C_chars.size();
  std::size_t nw = inv.W0.size();
  int nthreads = resolved_threads();

  struct Trio {
    Dsu all, dot, ddot;
    explicit Trio(std::size_t n) : all(n), dot(n), ddot(n) {}
  };
  std::vector<Trio> partial(static_cast<std::size_t>(nthreads), Trio(m));

  // Per-target-lattice projection tables, cached per thread by HNF key.
  struct Cache {
    QuotientGroup q;
    std::map<std::string, std::vector<int>> buckets;  // residue key -> chars
  };
  std::vector<std::map<std::string, Cache>> caches(
      static_cast<std::size_t>(nthreads));

  auto process = [&](int tid, std::size_t wi) {
    std::map<std::string, Cache>& cache = caches[static_cast<std::size_t>(tid)];
    Trio& t = partial[static_cast<std::size_t>(tid)];
    int w = inv.W0[wi];
    Mat mw = inv.W.matrix_of(w);
    Vec shift = rho_shift(inv.datum, mw);
    Sublattice s = join(inv.K_full, transform(mw, inv.K_full));
    std::string key = basis_key(s.basis);
    auto it = cache.find(key);
    if (it == cache.end()) {
      Cache c;
      c.q = quotient(s.ambient, s);
      for (std::size_t i = 0; i < m; ++i)
        c.buckets[residue_key(c.q.project(inv.C_lifts[i]))].push_back(
            static_cast<int>(i));
      it = cache.emplace(key, std::move(c)).first;
    }
    const Cache& c = it->second;
    for (std::size_t c2 = 0; c2 < m; ++c2) {
      Vec img = mat_vec(mw, inv.C_lifts[c2]);
      auto relate = [&](const Vec& target, Dsu& which) {
        auto bit = c.buckets.find(residue_key(c.q.project(target)));
        if (bit == c.buckets.end()) return;
        for (int c1 : bit->second) {
          which.unite(c1, static_cast<int>(c2));
          t.all.unite(c1, static_cast<int>(c2));
        }
      };
      relate(vec_add(img, shift), t.dot);
      relate(vec_sub(img, shift), t.ddot);
    }
  };

#ifdef SPHEREBLOCK_HAVE_OPENMP
#pragma omp parallel num_threads(nthreads)
  {
    int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic)
    for (std::size_t wi = 0; wi < nw; ++wi) process(tid, wi);
  }
#else
  for (std::size_t wi = 0; wi < nw; ++wi) process(0, wi);
#endif

  Trio merged(m);
  for (Trio& t : partial)
    for (std::size_t i = 0; i < m; ++i) {
      merged.all.unite(static_cast<int>(i), t.all.find(static_cast<int>(i)));
      merged.dot.unite(static_cast<int>(i), t.dot.find(static_cast<int>(i)));
      merged.ddot.unite(static_cast<int>(i), t.ddot.find(static_cast<int>(i)));
    }
  bool differ = false;
  for (std::size_t i = 0; i < m && !differ; ++i)
    differ = merged.dot.find(static_cast<int>(i)) !=
             merged.ddot.find(static_cast<int>(i));
  return table_from_partition(inv, merged.all, differ);
}

int class_of(const MonodromyClassTable& table, const Vec& c) {
  for (std::size_t i = 0; i < table.chars.size(); ++i)
    if (table.chars[i] == c)
      return table.class_of_char[i];
  throw ConfigError("character does not belong to the class table");
}

}  // namespace sphereblock
