#ifndef GADM_BOUNDARY_HPP_
#define GADM_BOUNDARY_HPP_

// Totally geodesic wall on the x3 faces: the components coupling the wall's
// second fundamental form vanish there,
//   K_13 = K_23 = G_113 = G_123 = G_213 = G_223 = 0,
// imposed by injection after every integrator stage. The boundary term of
// the energy identity is the quadratic form evaluated here; its damped
// version is negative semidefinite, certifying dissipativity.

#include <array>
#include <vector>

#include "gadm/hyperbolicity.hpp"
#include "gadm/state.hpp"

namespace gadm {

// State component ids of the six wall components.
extern const std::array<int, 6> kWallComps;

// Zeroes the wall components on both x3 faces; interior untouched;
// idempotent. Throws ConfigError on a fully periodic grid.
void impose_wall_conditions(StateField& s);

// Boundary energy-flux bilinear,
//   Q = K_3^j G^b_jb - trK G^b_3b - G^{ij}_3 K_ij,
// evaluated by the index contraction as written. Q = 0 exactly whenever the
// wall conditions hold.
double boundary_flux_q(const double k6[6], const double g9[9]);

// Matrix of the damped form F(u) = -1/2|K|^2 - 1/4|G|^2 + Q(u) in the
// symbol ordering; symmetric, all eigenvalues <= 0.
const Mat15& flux_form_matrix();

// First-order corner-condition residuals on the wall faces, 4 slots/node:
//   [ l2 over A of the tangential-trace G conditions, K22, K11, K12 ].
struct CornerResiduals {
  int n0 = 0, n1 = 0, nfaces = 0;
  std::vector<double> r;          // slot-major: r[slot*(nfaces*n0*n1) + idx]
  std::array<double, 4> max_abs;  // per slot
};
CornerResiduals corner_residuals(const StateField& s, int fd_order);

// Residuals of the angled-corner algebraic conditions for one tangential
// direction pair (pure pointwise checker; no slab construction):
//   first:  k(X,Y) sinh(w) - sff(X,Y) cosh(w)
//   second: k(X,N) - Xw
struct AngleCornerInput {
  double k_xy = 0.0;    // second fundamental form of the slice, k(X,Y)
  double k_xn = 0.0;    // k(X,N)
  double sff_xy = 0.0;  // shape term h(grad_X N, Y) of the corner surface
  double omega = 0.0;   // hyperbolic angle between slice normal and wall
  double domega = 0.0;  // tangential derivative Xw
};
std::array<double, 2> corner_residuals_angle(const AngleCornerInput& in);

// |R_30| of the evolved connection on the wall faces (face-major values),
// and its max; the wall conditions make this vanish in the continuum.
std::vector<double> wall_ricci_30(const StateField& s, int fd_order);
double wall_ricci_30_max(const StateField& s, int fd_order);

}  // namespace gadm

#endif
