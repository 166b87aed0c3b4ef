#ifndef GADM_INDEXING_HPP_
#define GADM_INDEXING_HPP_

// Component bookkeeping for the 33 evolved scalars per grid point.
//
// Unknowns (orthonormal spatial frame e_i = f_i^j d_j, unit lapse, zero shift):
//   f_i^j     frame coefficients            9 slots
//   f^b_j     inverse coefficients          9 slots   (f_i^j f^b_j = delta_i^b)
//   K_ij      extrinsic curvature, symmetric     6 slots
//   G_ijb     connection coefficients, antisymmetric in (j,b)   9 slots
//
// All tensor indices below are 0-based; the labels in comments ("K12" etc.)
// use the conventional 1-based names.

#include <array>

namespace gadm {

inline constexpr int NCOMP = 33;
inline constexpr int CF = 0;     // f_i^j     at CF + 3*i + j
inline constexpr int CFI = 9;    // f^b_j     at CFI + 3*b + j
inline constexpr int CK = 18;    // K_ij      at CK + sym6(i,j)
inline constexpr int CG = 24;    // G_ijb     at CG + 3*i + pair3(j,b), j<b

// Symmetric 3x3 slot: order 11,12,13,22,23,33.
inline constexpr int kSym6[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
inline constexpr int sym6(int i, int j) { return kSym6[i][j]; }
inline constexpr int kSym6I[6] = {0, 0, 0, 1, 1, 2};
inline constexpr int kSym6J[6] = {0, 1, 2, 1, 2, 2};

// Antisymmetric pair slot: order (1,2)->0, (1,3)->1, (2,3)->2 in 1-based labels.
inline constexpr int kPair3[3][3] = {{-1, 0, 1}, {0, -1, 2}, {1, 2, -1}};
inline constexpr int pair3(int j, int b) { return kPair3[j][b]; }
// Sign of (j,b) relative to stored (min,max) order: +1 if j<b, -1 if j>b, 0 if equal.
inline constexpr int pair_sign(int j, int b) { return j == b ? 0 : (j < b ? 1 : -1); }
inline constexpr int kPair3J[3] = {0, 0, 1};
inline constexpr int kPair3B[3] = {1, 2, 2};

// Names of all 33 components in storage (= snapshot) order.
inline constexpr std::array<const char*, NCOMP> kCompNames = {
    "f11",  "f12",  "f13",  "f21",  "f22",  "f23",  "f31",  "f32",  "f33",
    "fi11", "fi12", "fi13", "fi21", "fi22", "fi23", "fi31", "fi32", "fi33",
    "K11",  "K12",  "K13",  "K22",  "K23",  "K33",
    "G112", "G113", "G123", "G212", "G213", "G223", "G312", "G313", "G323"};

// Expand the 6 stored K slots to a full 3x3 matrix.
inline void expand_sym(const double k6[6], double k[3][3]) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k[i][j] = k6[sym6(i, j)];
}

// Expand the 9 stored G slots to the full 27-entry array, G[i][j][b] = G_ijb.
inline void expand_gamma(const double g9[9], double g[3][3][3]) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int b = 0; b < 3; ++b)
        g[i][j][b] = (j == b) ? 0.0 : pair_sign(j, b) * g9[3 * i + pair3(j, b)];
}

}  // namespace gadm

#endif
