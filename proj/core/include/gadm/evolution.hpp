#ifndef GADM_EVOLUTION_HPP_
#define GADM_EVOLUTION_HPP_

#include <functional>
#include <vector>

#include "gadm/state.hpp"

namespace gadm {

// Pointwise evolution right-hand sides. Inputs are point values in slot
// form (see indexing.hpp) plus the three frame derivatives of each slot:
// ek[a][s] = e_a K_s, eg[a][s] = e_a G_s. The combiner is linear in the
// derivative inputs; the principal part is what the hyperbolicity module's
// symbol tables encode, and the two are cross-checked by tests.
//
//   e_0 K_ij = -trK K_ij
//     + 1/2 [ e_i G^b_jb - e^b G_ijb + G^b_i^c G_cjb + G^b_b^c G_ijc + (i<->j) ]
//     - 1/2 delta_ij [ 2 e^a G^b_ab + G^bac G_cab + G^b_b^c G^a_ac
//                      + |K|^2 - (trK)^2 ]
//   e_0 G_ijb = -K_i^c G_cjb + e_j K_bi - e_b K_ji
//     - G_jb^c K_ci - G_ji^c K_bc + G_bj^c K_ci + G_bi^c K_jc
//     + delta_ib M_j - delta_ij M_b,
//   with M_j = e^c K_cj - G_c^cl K_lj - G^c_j^l K_cl - e_j trK.
void rhs_point_kg(const double k6[6], const double g9[9], const double ek[3][6],
                  const double eg[3][9], double dk6[6], double dg9[9]);

//   e_0 f_i^j = -K_i^c f_c^j,   e_0 f^b_j = +K_c^b f^c_j.
void rhs_point_frame(const double k6[6], const double f9[9],
                     const double fi9[9], double df9[9], double dfi9[9]);

using SourceFn = std::function<void(double t, double* buf)>;

struct EvolveOptions {
  int fd_order = 4;
  double dissipation = 0.0;        // grid-scale damping weight, 0 = off
  bool geodesic_boundary = false;  // inject the wall conditions each stage
  double det_floor = 1e-8;         // |det f| below this aborts (caustic)
};

// Owns the stencil workspace for repeated RHS evaluations on one grid.
class Evolver {
 public:
  Evolver(const Grid& grid, const EvolveOptions& opts);

  const EvolveOptions& options() const { return opts_; }

  // Fills out (NCOMP*npts, state layout) with the full nonlinear RHS.
  // source, if given, is added (same layout). Throws NumericalAbort on a
  // non-finite result, identifying component and point.
  void eval_rhs(const StateField& s, double* out,
                const double* source = nullptr);

  // Same, but with the e_3 frame-derivative content of K and G zeroed
  // before the pointwise combine; used to verify that normal derivatives
  // are recoverable from tangential data.
  void eval_rhs_no_e3(const StateField& s, double* out);

  // Classical RK4 step; the boundary injection (when configured) is applied
  // to every stage state and to the result. source_fn, if given, is
  // evaluated at each stage time. Throws NumericalAbort if the new state is
  // non-finite or |det f| drops below the floor.
  void step_rk4(StateField& s, double dt, const SourceFn* source_fn = nullptr);

 private:
  void eval_rhs_impl(const StateField& s, double* out, const double* source,
                     bool zero_e3);

  Grid grid_;
  EvolveOptions opts_;
  std::vector<double> ek_, eg_;            // frame-derivative fields
  std::vector<double> p0_, p1_, p2_;       // partial scratch
  std::vector<double> acc_, kcur_, src_;   // RK4 buffers
  StateField utmp_;
};

// dt = cfl_factor * min(h_a) / max(max |char speed|, 1).
double cfl_dt(const Grid& grid, double cfl_factor);

}  // namespace gadm

#endif
