#ifndef GADM_RUNNER_HPP_
#define GADM_RUNNER_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "gadm/config.hpp"
#include "gadm/evolution.hpp"
#include "gadm/mms.hpp"
#include "gadm/report.hpp"
#include "gadm/state.hpp"

namespace gadm {

// Full evolution run: initial data per the scenario, RK4 with the CFL step,
// residual CSV row at t0 and after every output interval, snapshots per the
// snapshot cadence (the final slice is always written), resolved.cfg echo.
// A numerical abort is caught, reported to <out_dir>/failure.txt together
// with the last healthy residual row, and returned as exit_code 3.
struct EvolveOutcome {
  int exit_code = 0;  // 0 ok, 3 numerical abort
  std::string failure;
  ResidualReport first, last;
  ResidualReport worst;  // fieldwise maxima over all emitted rows
  std::string csv_path;
  std::vector<std::string> snapshot_paths;
  StateField final_state;
  bool has_mms = false;
  MmsError mms_final;  // against the recipe, for mms runs
};
EvolveOutcome run_evolve(const RunConfig& cfg, std::ostream* log);

// Self-convergence ladder: the configured run on `levels` grids, each a
// refinement of the previous, comparing a scenario-specific error:
//   mms               max-norm solution error against the recipe at t_end
//   kasner            max-norm K error against the homogeneous solution
//   perturbed-kasner  max |R_30| on the wall faces at t_end
// With torsion_check (mms only), each level also evolves the same initial
// data unsourced and measures the torsion-propagation discrepancy
//   max | d_t C (centered stencil) - e_0 C (evolution identity) |
// at a fixed interior time. Orders are log2 ratios of consecutive levels;
// a non-decreasing pair yields NaN and a warning in the notes.
struct ConvergenceLevel {
  std::array<int, 3> n{};
  double dt = 0.0;
  double err = 0.0;
  double torsion_err = 0.0;
};
struct ConvergenceResult {
  std::vector<ConvergenceLevel> levels;
  std::vector<double> orders;
  std::vector<double> torsion_orders;
  std::vector<std::string> notes;
  std::string table;  // human-readable
  std::string csv;
};
ConvergenceResult run_convergence(const RunConfig& cfg, int levels,
                                  bool torsion_check, std::ostream* log);

// Centered-in-time check of the torsion propagation identity: evolves
// steps_to_center steps of size dt (unsourced), then compares the stencil
// time derivative of the torsion over the surrounding slices against the
// evolution identity evaluated on the center slice. stencil_points is 3
// (second order) or 5 (fourth order); steps_to_center must cover the half
// stencil.
struct TorsionPropagation {
  double t_center = 0.0;
  double dt = 0.0;
  double discrepancy_max = 0.0;
};
TorsionPropagation torsion_propagation_check(const StateField& initial,
                                             const EvolveOptions& opts,
                                             double dt, int steps_to_center,
                                             int stencil_points);

// Structure battery over the algebraic certificates. The hooks exist for
// tests to prove the battery actually detects violations: they perturb a
// copy of one principal matrix entry or flip the sign of the flux form.
struct CheckHooks {
  int sym_perturb_row = -1;
  int sym_perturb_col = -1;
  double sym_perturb = 0.0;  // added to the axis-3 matrix copy
  bool flux_flip_sign = false;
};
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct CheckSuite {
  std::vector<CheckItem> items;
  bool all_pass = false;
};
CheckSuite run_checks(const CheckHooks& hooks);

}  // namespace gadm

#endif
