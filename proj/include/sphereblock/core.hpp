#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphereblock {

// Arbitrary-precision integer used throughout the lattice layer.  Weyl group
// matrices are kept in machine ints (see rootdata.hpp); everything that mixes
// user input with unimodular transforms goes through Int.
using Int = boost::multiprecision::cpp_int;

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row-major

// Bad user input (CLI flags, JSON documents, out-of-range parameters).
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal guarantee (an invariant the mathematics promises).
// The CLI maps this to exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline Mat identity_mat(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat out(n, Vec(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t q = 0; q < p; ++q) out[i][q] += a[i][j] * b[j][q];
    }
  return out;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

// Worker-count cap honoured by all parallel kernels: the value of
// SPHEREBLOCK_THREADS when set to a positive integer, otherwise 0 (no cap).
inline int thread_cap() {
  const char* s = std::getenv("SPHEREBLOCK_THREADS");
  if (!s || !*s) return 0;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0) return 0;
  return static_cast<int>(v);
}

}  // namespace sphereblock
