#ifndef GADM_SCENARIOS_HPP_
#define GADM_SCENARIOS_HPP_

#include <array>
#include <vector>

#include "gadm/state.hpp"

namespace gadm {

// f = finv = identity, K = G = 0, t = 0.
StateField minkowski(const Grid& g);

// Homogeneous anisotropic vacuum at time t0 > 0:
//   f = diag(t0^-p_i), finv = diag(t0^p_i), K = diag(p_i/t0), G = 0.
// Requires sum p_i = sum p_i^2 = 1 within 1e-12; throws ConfigError listing
// both sums otherwise.
StateField kasner(const Grid& g, const std::array<double, 3>& p, double t0);

// Kasner plus a tracefree tangential perturbation, K11 += A*prof and
// K22 -= A*prof with
//   prof = [4 z (L-z) / L^2]^8 * (1 + 1/2 cos(2 pi x1/P1) cos(2 pi x2/P2)),
// z the offset along axis 3. The profile vanishes to 8th order at the
// faces, so the wall components stay exactly zero and the first-order
// corner conditions hold to stencil accuracy. Constraints are violated at
// O(A) by design; the violation is monitored, not solved away.
StateField perturbed_kasner(const Grid& g, const std::array<double, 3>& p,
                            double t0, double amplitude);

// Frame data from a coordinate metric h and second fundamental form k
// (each 6 fields of npts values, symmetric slot order 11,12,13,22,23,33):
// Gram-Schmidt of (d_1, d_2, d_3) against h, tangents first, which makes
// e_1, e_2 tangential to the x3 faces and e_3 the unit normal there;
// K_ij = f_i^a f_j^b k_ab; G by the Koszul formula of the frame.
// Throws ConfigError naming the first point where h is not positive
// definite.
StateField from_geometric_data(const Grid& g, const std::vector<double>& h6,
                               const std::vector<double>& k6, int fd_order);

// Induced coordinate metric read back from the inverse frame coefficients,
// h_ab = sum_i finv^i_a finv^i_b; 6 fields, symmetric slot order.
std::vector<double> induced_metric(const StateField& s);

// f = identity + a few seeded low-frequency modes (periodic, amplitude-
// bounded so f stays invertible), finv the pointwise inverse, K = 0 and
// G the Koszul connection of f. Test data for the Levi-Civita identities.
StateField random_periodic_frame(const Grid& g, unsigned long long seed,
                                 double amplitude, int fd_order);

}  // namespace gadm

#endif
