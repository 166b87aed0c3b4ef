#ifndef GADM_MMS_HPP_
#define GADM_MMS_HPP_

#include <string>
#include <vector>

#include "gadm/state.hpp"

namespace gadm {

// Manufactured solutions: closed-form component fields u_c(t, x) with exact
// time and space derivatives. The source S = d_t u - F(u), with F evaluated
// analytically through the pointwise right-hand sides (frame derivatives
// e_a = f_a^j d_j taken from the recipe's own f and exact partials), turns
// the evolved system into one whose exact solution is the recipe.
//
// Recipes:
//   kasner-exact  homogeneous power-law solution; the source vanishes
//                 identically (analytic zero, roundoff in practice).
//   trig01        low-frequency travelling waves in every component,
//                 periodic with period 1 along each coordinate; f diagonal
//                 and finv its exact reciprocal.

std::vector<std::string> mms_recipes();
bool has_mms_recipe(const std::string& name);

// Pointwise evaluation: values, time derivatives, coordinate derivatives.
// Throws ConfigError for unknown recipes (and for kasner-exact at t <= 0).
void mms_eval(const std::string& recipe, double t, const double x[3],
              double u[NCOMP], double dtu[NCOMP], double dxu[3][NCOMP]);

// The recipe sampled on a grid at time t.
StateField mms_state(const std::string& recipe, const Grid& g, double t);

// S = d_t u - F(u) at time t, written to out[c*npts + q] (state layout).
void mms_source(const std::string& recipe, const Grid& g, double t,
                double* out);

// Max-norm error of s against the recipe at s.time(), per component group.
struct MmsError {
  double f = 0.0, finv = 0.0, k = 0.0, g = 0.0;
  double all = 0.0;
};
MmsError mms_error(const StateField& s, const std::string& recipe);

}  // namespace gadm

#endif
