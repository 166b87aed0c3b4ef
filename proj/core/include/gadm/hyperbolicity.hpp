#ifndef GADM_HYPERBOLICITY_HPP_
#define GADM_HYPERBOLICITY_HPP_

// Principal-part analysis of the K/G subsystem. The 15 first-order unknowns
// are ordered
//   (K11, K12, K22, K13, K23, K33,
//    G113, G223, G123, G213, G313, G323, G312, G112, G212)
// and the linearized equations around the zero state read
//   H du/dt = ( xi_1 A1 + xi_2 A2 + xi_3 A3 ) du/dxi + lower order,
// with A1, A2, A3 constant symmetric integer matrices and H the diagonal
// symmetrizer carrying 2 on the off-diagonal K rows (their equations arrive
// with a factor 2 on the time derivative). Characteristic speeds are the
// eigenvalues of H^{-1/2} M(xi) H^{-1/2}.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gadm/state.hpp"

namespace gadm {

inline constexpr int kSymbolDim = 15;
using Mat15 = std::array<std::array<double, kSymbolDim>, kSymbolDim>;
using Vec15 = std::array<double, kSymbolDim>;

extern const std::array<const char*, kSymbolDim> kSymbolNames;
// symbol slot -> index into the concatenated (K6|G9) point-value vector
extern const std::array<int, kSymbolDim> kSymbolSlot;
// diagonal symmetrizer H (also the energy weights: u.Hu = |K|^2 + ... )
extern const std::array<double, kSymbolDim> kSymmetrizerDiag;

// A^axis, axis in {0,1,2}; exactly symmetric, entries in {0, +-1}.
const Mat15& principal_matrix(int axis);

// M(xi); throws ConfigError on xi = 0.
Mat15 assemble_symbol(const std::array<double, 3>& xi);

// 15 real speeds for unit xi, ascending.
std::array<double, kSymbolDim> characteristic_speeds(
    const std::array<double, 3>& xi);

// Cached max |speed| over the axes and a fixed set of sampled directions.
double max_characteristic_speed();

// Variables whose equations carry an e_3 derivative (good) vs those whose
// equations are purely tangential (bad). Combination vectors are in symbol
// ordering with integer coefficients.
struct GoodBadSplit {
  std::vector<std::pair<std::string, Vec15>> good;  // 10 entries
  std::vector<std::pair<std::string, Vec15>> bad;   // 5 entries
};
const GoodBadSplit& classify_good_bad();

// max over entries of | H J(xi) - M(xi) | where J is the finite-difference
// Jacobian of the pointwise RHS with respect to the frame-derivative inputs
// at the zero state (step 1e-5). Ties the symbol tables to the production
// RHS; the RHS is linear in those inputs, so this is exact up to round-off.
double symbol_vs_rhs_jacobian_max_err(const std::array<double, 3>& xi);

// Reconstruction of e_3 derivatives of the good-set variables from the
// full nonlinear RHS: subtracting an RHS evaluation with the e_3 content
// zeroed isolates each equation's single e_3 term. `direct` holds the same
// derivatives computed by applying the e_3 stencil to the state.
struct NormalRecovery {
  std::vector<std::string> labels;                 // 10 good-set members
  std::vector<std::vector<double>> reconstructed;  // 10 x npts
  std::vector<std::vector<double>> direct;         // 10 x npts
  std::array<double, 5> bad_row_max;  // residual e_3 content of bad rows
  double max_mismatch = 0.0;          // max |reconstructed - direct|
};
NormalRecovery normal_recovery(const StateField& s, int fd_order);

}  // namespace gadm

#endif
