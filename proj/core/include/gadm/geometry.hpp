#ifndef GADM_GEOMETRY_HPP_
#define GADM_GEOMETRY_HPP_

// Curvature and constraint diagnostics of a state. All quantities are built
// from the evolved variables with frame derivatives e_i = f_i^j d_j; the
// connection enters as the evolved G_ijb, so every curvature here is the
// "hatted" one of the connection D^ (which has torsion while G differs from
// the Koszul connection of f).
//
// Layouts (n = npts):
//   torsion / torsion_rhs:  slot [3*pair3(i,j) + b] * n   (C_ijb = -C_jib)
//   spatial_ricci_hat:      slot [3*i + j] * n            (full 3x3)
//   momentum_residual:      slot [j] * n
//   riemann_hat:            slot [((a*3+i)*3+j)*3+b] * n

#include <vector>

#include "gadm/state.hpp"

namespace gadm {

// C_ijb = f^b_l e_i f_j^l - f^b_l e_j f_i^l - G_ijb + G_jib.
std::vector<double> torsion(const StateField& s, int fd_order);

// -R^_ij = e_i G^b_jb - e^b G_ijb + G^b_i^c G_cjb + G^b_b^c G_ijc.
// Symmetric only when the torsion vanishes; the full 3x3 is returned.
std::vector<double> spatial_ricci_hat(const StateField& s, int fd_order);

// -R^ = 2 e^j G^b_jb + G^bjc G_cjb + G^b_b^c G^j_jc.
std::vector<double> spatial_scalar(const StateField& s, int fd_order);

// H = R^ - |K|^2 + (trK)^2.
std::vector<double> hamiltonian_residual(const StateField& s, int fd_order);

// M_j = e^c K_cj - G_c^cl K_lj - G^c_j^l K_cl - e_j trK.
std::vector<double> momentum_residual(const StateField& s, int fd_order);

// R^_j0 is the momentum residual expression; dual name, same code path.
inline std::vector<double> ricci_b0(const StateField& s, int fd_order) {
  return momentum_residual(s, fd_order);
}

// R^_aijb = e_a G_ijb - e_i G_ajb - G_ab^c G_ijc + G_ib^c G_ajc
//           - G_ai^c G_cjb + G_ia^c G_cjb.
// Antisymmetries in (a,i) and (j,b) hold algebraically and are checked by
// tests, not imposed.
std::vector<double> riemann_hat(const StateField& s, int fd_order);

// e_0 C_ijb = K_b^l C_ijl - K_i^l C_ljb - K_j^l C_ilb
//             - delta_ib R^_j0 + delta_jb R^_i0.
std::vector<double> torsion_rhs(const StateField& s, int fd_order);

}  // namespace gadm

#endif
