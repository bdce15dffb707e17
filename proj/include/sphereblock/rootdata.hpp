#pragma once

#include "sphereblock/core.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace sphereblock {

enum class LatticeMode { simply_connected, adjoint };

// Accepts "simply_connected", "adjoint", "root_lattice" (alias of adjoint).
LatticeMode lattice_mode_from_string(const std::string& s);
std::string to_string(LatticeMode m);

// Exact root-system data in a fixed coordinate system on X*(T):
// fundamental-weight coordinates for simply_connected, simple-root
// coordinates for adjoint.  rho itself may be half-integral, so 2*rho is
// stored; every exposed result is integral.
struct RootDatum {
  char cartan_type = 'A';
  int rank = 0;
  LatticeMode mode = LatticeMode::adjoint;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  Mat simple_roots;                      // row i = alpha_i in X*(T) coordinates
  Mat simple_coroots;                    // row i = alpha_i^vee as a covector
  std::vector<Mat> refl;                 // simple reflections acting on X*(T)
  std::vector<Vec> positive_roots;       // in X*(T) coordinates
  Vec rho2;                              // 2*rho

  Int pairing(const Vec& lam, int i) const;  // <lam, alpha_i^vee>
};

RootDatum build_root_datum(char cartan_type, int rank, LatticeMode mode);

// |W| from the classification; guards enumeration without running it.
Int weyl_order(char cartan_type, int rank);

struct WeylElement {
  Mat matrix;
  std::vector<int> word;  // lexicographically least reduced word, 0-based
  int length = 0;
};

// The full Weyl group, enumerated and indexed.  Elements are sorted by
// (length, lexicographic word); index 0 is the identity and the last index
// is the longest element.  Matrices are stored flat in machine integers
// (entries stay tiny for rank <= 8).
struct WeylGroup {
  int rank = 0;
  std::size_t size = 0;
  std::vector<std::vector<int32_t>> mats;  // flattened rank*rank, row-major
  std::vector<int> lengths;
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> left;  // left[g][w] = index of s_g * w
  std::vector<int> inverse;

  int find_flat(const std::vector<int32_t>& m) const;  // -1 if absent
  int find(const Mat& m) const;
  int mul_left(int gen, int w) const { return left[gen][w]; }
  int mul(int a, int b) const;  // group product a * b
  int element_of_word(const std::vector<int>& word) const;
  Mat matrix_of(int w) const;
  WeylElement element(int w) const;
  std::string word_string(int w) const;  // "e" or "s1.s2.s1"
  int longest() const { return static_cast<int>(size) - 1; }

  std::unordered_map<std::string, int> index;  // flat-matrix bytes -> element
};

WeylGroup enumerate_weyl(const RootDatum& rd);

// w*rho - rho; always integral (lies in the root lattice).
Vec rho_shift(const RootDatum& rd, const Mat& w);

// Dot and ddot actions: w . lam = w*lam + (w*rho - rho),
//                       w .. lam = w*lam - (w*rho - rho).
Vec dot_act(const RootDatum& rd, const Mat& w, const Vec& lam);
Vec ddot_act(const RootDatum& rd, const Mat& w, const Vec& lam);

// Coset Bruhat order <=_L: compare minimal-length representatives modulo the
// parabolic subgroup generated by parabolic_subset (0-based simple indices).
// An empty subset gives the ordinary Bruhat order.
bool bruhat_leq(const WeylGroup& w, int w1, int w2,
                const std::vector<int>& parabolic_subset);

}  // namespace sphereblock
