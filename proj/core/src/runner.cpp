#include "gadm/runner.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "gadm/boundary.hpp"
#include "gadm/errors.hpp"
#include "gadm/geometry.hpp"
#include "gadm/hyperbolicity.hpp"
#include "gadm/parallel.hpp"
#include "gadm/scenarios.hpp"
#include "gadm/snapshot.hpp"

namespace gadm {

namespace {

namespace fs = std::filesystem;

struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double uniform() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return double((s * 0x2545f4914f6cdd1dull) >> 11) * 0x1.0p-53;
  }
  double centered() { return 2.0 * uniform() - 1.0; }
};

StateField initial_state(const RunConfig& cfg) {
  if (cfg.scenario == "minkowski") {
    StateField s = minkowski(cfg.grid);
    s.set_time(cfg.t0);
    return s;
  }
  if (cfg.scenario == "kasner") return kasner(cfg.grid, cfg.p, cfg.t0);
  if (cfg.scenario == "perturbed-kasner")
    return perturbed_kasner(cfg.grid, cfg.p, cfg.t0, cfg.amplitude);
  if (cfg.scenario == "mms") return mms_state(cfg.recipe, cfg.grid, cfg.t0);
  throw ConfigError("unknown scenario '" + cfg.scenario + "'");
}

EvolveOptions options_from(const RunConfig& cfg) {
  EvolveOptions o;
  o.fd_order = cfg.fd_order;
  o.dissipation = cfg.dissipation;
  o.geodesic_boundary = cfg.geodesic_wall;
  return o;
}

void take_worst(ResidualReport& w, const ResidualReport& r) {
  w.t = r.t;
  w.ham_l2 = std::max(w.ham_l2, r.ham_l2);
  w.ham_max = std::max(w.ham_max, r.ham_max);
  for (int j = 0; j < 3; ++j) {
    w.mom_l2[j] = std::max(w.mom_l2[j], r.mom_l2[j]);
    w.mom_max[j] = std::max(w.mom_max[j], r.mom_max[j]);
  }
  w.torsion_l2 = std::max(w.torsion_l2, r.torsion_l2);
  w.torsion_max = std::max(w.torsion_max, r.torsion_max);
  w.ricci_b0_l2 = std::max(w.ricci_b0_l2, r.ricci_b0_l2);
  w.ricci_b0_max = std::max(w.ricci_b0_max, r.ricci_b0_max);
  w.fdrift_max = std::max(w.fdrift_max, r.fdrift_max);
  w.energy = std::max(w.energy, r.energy);
  w.hs1 = std::max(w.hs1, r.hs1);
  w.bs1 = std::max(w.bs1, r.bs1);
  for (int sl = 0; sl < 4; ++sl)
    w.corner_max[sl] = std::max(w.corner_max[sl], r.corner_max[sl]);
  w.ricci30_face_max = std::max(w.ricci30_face_max, r.ricci30_face_max);
}

double kasner_k_error(const StateField& s, const std::array<double, 3>& p) {
  const double t = s.time();
  const std::size_t n = s.npts();
  double worst = 0.0;
  for (int sl = 0; sl < 6; ++sl) {
    const int i = kSym6I[sl];
    const double expect = i == kSym6J[sl] ? p[i] / t : 0.0;
    const double* u = s.comp(CK + sl);
    worst = std::max(worst, parallel_max(n, [&](std::size_t q) {
                       return std::abs(u[q] - expect);
                     }));
  }
  return worst;
}

double minkowski_error(const StateField& s) {
  const std::size_t n = s.npts();
  double worst = 0.0;
  for (int c = 0; c < NCOMP; ++c) {
    double expect = 0.0;
    if (c == CF || c == CF + 4 || c == CF + 8 || c == CFI || c == CFI + 4 ||
        c == CFI + 8)
      expect = 1.0;
    const double* u = s.comp(c);
    worst = std::max(worst, parallel_max(n, [&](std::size_t q) {
                       return std::abs(u[q] - expect);
                     }));
  }
  return worst;
}

double solution_error(const RunConfig& cfg, const StateField& s) {
  if (cfg.scenario == "mms") return mms_error(s, cfg.recipe).all;
  if (cfg.scenario == "kasner") return kasner_k_error(s, cfg.p);
  if (cfg.scenario == "perturbed-kasner")
    return wall_ricci_30_max(s, cfg.fd_order);
  return minkowski_error(s);
}

double order_between(double coarse, double fine, const char* what,
                     std::vector<std::string>& notes) {
  if (coarse > 0.0 && fine > 0.0 && coarse > fine)
    return std::log2(coarse / fine);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%s error does not decrease between levels (%.6g -> %.6g); "
                "order reported as nan",
                what, coarse, fine);
  notes.push_back(buf);
  return std::nan("");
}

void symbol_to_kg(const double u[kSymbolDim], double k6[6], double g9[9]) {
  for (int r = 0; r < kSymbolDim; ++r) {
    const int sl = kSymbolSlot[r];
    if (r < 6)
      k6[sl] = u[r];
    else
      g9[sl - 6] = u[r];
  }
}

}  // namespace

EvolveOutcome run_evolve(const RunConfig& cfg, std::ostream* log) {
  EvolveOutcome out;
  StateField s = initial_state(cfg);
  const EvolveOptions opts = options_from(cfg);
  Evolver ev(cfg.grid, opts);
  if (opts.geodesic_boundary) impose_wall_conditions(s);

  SourceFn src;
  const SourceFn* srcp = nullptr;
  if (cfg.scenario == "mms") {
    out.has_mms = true;
    const Grid g = cfg.grid;
    const std::string recipe = cfg.recipe;
    src = [g, recipe](double t, double* buf) { mms_source(recipe, g, t, buf); };
    srcp = &src;
  }

  fs::create_directories(cfg.out_dir);
  {
    std::ofstream rc(fs::path(cfg.out_dir) / "resolved.cfg", std::ios::binary);
    if (!rc) throw ConfigError("cannot write into '" + cfg.out_dir + "'");
    rc << render_config(cfg);
  }
  out.csv_path = (fs::path(cfg.out_dir) / "residuals.csv").string();
  std::ofstream csv(out.csv_path, std::ios::binary);
  if (!csv) throw ConfigError("cannot write '" + out.csv_path + "'");
  csv << csv_header(cfg.grid.has_boundary());

  const double span = cfg.t_end - cfg.t0;
  const int nint = std::max(1, int(std::ceil(span / cfg.output_interval - 1e-9)));
  const double dt_base = cfl_dt(cfg.grid, cfg.cfl);

  const auto emit = [&](const ResidualReport& r) {
    csv << csv_row(r);
    csv.flush();
    if (log) *log << summary_line(r) << '\n';
  };
  const auto snap = [&](int k) {
    char name[32];
    std::snprintf(name, sizeof name, "snap_%04d.gadm", k);
    const std::string p = (fs::path(cfg.out_dir) / name).string();
    write_snapshot(p, s);
    out.snapshot_paths.push_back(p);
  };

  ResidualReport r = compute_residuals(s, cfg.fd_order);
  out.first = out.last = out.worst = r;
  emit(r);
  snap(0);

  long steps_done = 0;
  try {
    for (int k = 1; k <= nint; ++k) {
      const double tk =
          k == nint ? cfg.t_end : cfg.t0 + double(k) * cfg.output_interval;
      const double seg = tk - s.time();
      const int steps = std::max(1, int(std::ceil(seg / dt_base - 1e-9)));
      const double dt = seg / steps;
      for (int i = 0; i < steps; ++i) {
        ev.step_rk4(s, dt, srcp);
        ++steps_done;
      }
      r = compute_residuals(s, cfg.fd_order);
      out.last = r;
      take_worst(out.worst, r);
      emit(r);
      if ((cfg.snapshot_every > 0 && k % cfg.snapshot_every == 0) || k == nint)
        snap(k);
    }
  } catch (const NumericalAbort& ab) {
    out.exit_code = 3;
    out.failure = ab.what();
    std::ofstream fr(fs::path(cfg.out_dir) / "failure.txt", std::ios::binary);
    fr << "numerical abort after " << steps_done << " accepted steps\n"
       << ab.what() << "\n\nlast healthy slice:\n"
       << summary_line(out.last) << '\n';
    if (log) *log << "abort: " << ab.what() << '\n';
  }

  out.final_state = std::move(s);
  if (out.exit_code == 0 && out.has_mms)
    out.mms_final = mms_error(out.final_state, cfg.recipe);
  return out;
}

ConvergenceResult run_convergence(const RunConfig& cfg, int levels,
                                  bool torsion_check, std::ostream* log) {
  if (levels < 2)
    throw ConfigError("convergence needs at least 2 levels, got " +
                      std::to_string(levels));
  if (torsion_check && cfg.scenario != "mms")
    throw ConfigError("the torsion propagation sweep needs the mms scenario");

  ConvergenceResult res;
  Grid g = cfg.grid;
  int steps0 = 0, tsteps0 = 0;
  const double span = cfg.t_end - cfg.t0;

  for (int l = 0; l < levels; ++l) {
    RunConfig c = cfg;
    c.grid = g;
    const EvolveOptions opts = options_from(c);
    const double dt_base = cfl_dt(g, c.cfl);

    // level 0 fixes the step counts; later levels double them so dt halves
    // exactly and temporal and spatial resolution refine together
    if (l == 0) steps0 = std::max(1, int(std::ceil(span / dt_base - 1e-9)));
    const int steps = steps0 << l;
    const double dt = span / steps;

    ConvergenceLevel lev;
    lev.n = g.n;
    lev.dt = dt;

    StateField s = initial_state(c);
    Evolver ev(g, opts);
    if (opts.geodesic_boundary) impose_wall_conditions(s);
    SourceFn src;
    const SourceFn* srcp = nullptr;
    if (c.scenario == "mms") {
      const Grid gg = g;
      const std::string recipe = c.recipe;
      src = [gg, recipe](double t, double* buf) { mms_source(recipe, gg, t, buf); };
      srcp = &src;
    }
    for (int i = 0; i < steps; ++i) ev.step_rk4(s, dt, srcp);
    lev.err = solution_error(c, s);

    if (torsion_check) {
      const double window = 0.1 * span;
      if (l == 0)
        tsteps0 = std::max(2, int(std::ceil(window / dt_base - 1e-9)));
      const int tsteps = tsteps0 << l;
      StateField s0 = initial_state(c);
      const TorsionPropagation tp =
          torsion_propagation_check(s0, opts, window / tsteps, tsteps, 5);
      lev.torsion_err = tp.discrepancy_max;
    }

    res.levels.push_back(lev);
    if (log) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "level %d: n=(%d,%d,%d) dt=%.6g err=%.6e torsion=%.6e",
                    l, g.n[0], g.n[1], g.n[2], lev.dt, lev.err,
                    lev.torsion_err);
      *log << buf << '\n';
    }
    g = g.refined();
  }

  for (std::size_t i = 0; i + 1 < res.levels.size(); ++i) {
    res.orders.push_back(order_between(res.levels[i].err,
                                       res.levels[i + 1].err, "solution",
                                       res.notes));
    if (torsion_check)
      res.torsion_orders.push_back(
          order_between(res.levels[i].torsion_err,
                        res.levels[i + 1].torsion_err, "torsion propagation",
                        res.notes));
  }

  {
    std::string t =
        "level        n          dt          err      order";
    if (torsion_check) t += "   torsion_err   t_order";
    t += '\n';
    std::string c = "level,n1,n2,n3,dt,err,order";
    if (torsion_check) c += ",torsion_err,torsion_order";
    c += '\n';
    char buf[240];
    for (std::size_t l = 0; l < res.levels.size(); ++l) {
      const ConvergenceLevel& lv = res.levels[l];
      const double od = l == 0 ? std::nan("") : res.orders[l - 1];
      std::snprintf(buf, sizeof buf, "%5zu  %3dx%3dx%3d  %10.4e  %10.4e  %7.3f",
                    l, lv.n[0], lv.n[1], lv.n[2], lv.dt, lv.err, od);
      t += buf;
      if (torsion_check) {
        const double tod = l == 0 ? std::nan("") : res.torsion_orders[l - 1];
        std::snprintf(buf, sizeof buf, "    %10.4e  %7.3f", lv.torsion_err, tod);
        t += buf;
      }
      t += '\n';
      std::snprintf(buf, sizeof buf, "%zu,%d,%d,%d,%.17g,%.17g,%.17g", l,
                    lv.n[0], lv.n[1], lv.n[2], lv.dt, lv.err, od);
      c += buf;
      if (torsion_check) {
        const double tod = l == 0 ? std::nan("") : res.torsion_orders[l - 1];
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", lv.torsion_err, tod);
        c += buf;
      }
      c += '\n';
    }
    res.table = std::move(t);
    res.csv = std::move(c);
  }
  if (log) {
    for (const std::string& nmsg : res.notes) *log << "warning: " << nmsg << '\n';
  }
  return res;
}

TorsionPropagation torsion_propagation_check(const StateField& initial,
                                             const EvolveOptions& opts,
                                             double dt, int steps_to_center,
                                             int stencil_points) {
  if (stencil_points != 3 && stencil_points != 5)
    throw ConfigError("stencil_points must be 3 or 5, got " +
                      std::to_string(stencil_points));
  const int hw = stencil_points == 3 ? 1 : 2;
  if (steps_to_center < hw)
    throw ConfigError("steps_to_center must be at least " + std::to_string(hw) +
                      " to cover the stencil");
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");

  StateField s = initial;
  Evolver ev(s.grid(), opts);
  const std::size_t n9 = 9 * s.npts();

  std::vector<std::vector<double>> cs;
  cs.reserve(2 * hw + 1);
  std::vector<double> rhs_center;
  TorsionPropagation out;
  out.dt = dt;

  const int last = steps_to_center + hw;
  for (int step = 0; step <= last; ++step) {
    if (step >= steps_to_center - hw) {
      cs.push_back(torsion(s, opts.fd_order));
      if (step == steps_to_center) {
        rhs_center = torsion_rhs(s, opts.fd_order);
        out.t_center = s.time();
      }
    }
    if (step < last) ev.step_rk4(s, dt);
  }

  out.discrepancy_max = parallel_max(n9, [&](std::size_t q) {
    double num;
    if (hw == 1)
      num = (cs[2][q] - cs[0][q]) / (2.0 * dt);
    else
      num = (cs[0][q] - 8.0 * cs[1][q] + 8.0 * cs[3][q] - cs[4][q]) /
            (12.0 * dt);
    return std::abs(num - rhs_center[q]);
  });
  return out;
}

CheckSuite run_checks(const CheckHooks& hooks) {
  CheckSuite suite;
  char buf[240];
  const auto add = [&](const std::string& name, bool pass,
                       const std::string& detail) {
    suite.items.push_back({name, pass, detail});
  };

  {
    double worst = 0.0;
    int wa = -1, wr = -1, wc = -1;
    for (int a = 0; a < 3; ++a) {
      Mat15 m = principal_matrix(a);
      if (a == 2 && hooks.sym_perturb_row >= 0 && hooks.sym_perturb_col >= 0)
        m[hooks.sym_perturb_row][hooks.sym_perturb_col] += hooks.sym_perturb;
      for (int r = 0; r < kSymbolDim; ++r)
        for (int c = 0; c < kSymbolDim; ++c) {
          const double d = std::abs(m[r][c] - m[c][r]);
          if (d > worst) {
            worst = d;
            wa = a;
            wr = r;
            wc = c;
          }
        }
    }
    if (worst == 0.0)
      add("symbol-symmetry", true, "A1, A2, A3 exactly symmetric");
    else {
      std::snprintf(buf, sizeof buf,
                    "axis %d asymmetric at (%s, %s) by %.6g", wa + 1,
                    kSymbolNames[wr], kSymbolNames[wc], worst);
      add("symbol-symmetry", false, buf);
    }
  }

  {
    Rng rng(2024);
    double mx = 0.0;
    const auto scan = [&](const std::array<double, 3>& xi) {
      for (double v : characteristic_speeds(xi)) mx = std::max(mx, std::abs(v));
    };
    scan({1, 0, 0});
    scan({0, 1, 0});
    scan({0, 0, 1});
    for (int it = 0; it < 16; ++it) {
      std::array<double, 3> xi{rng.centered(), rng.centered(), rng.centered()};
      const double nn =
          std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
      if (nn < 1e-3) continue;
      for (double& v : xi) v /= nn;
      scan(xi);
    }
    std::snprintf(buf, sizeof buf, "max |speed| = %.15g over sampled directions",
                  mx);
    add("speed-bound", mx <= 1.0 + 1e-12, buf);
  }

  {
    Rng rng(77);
    double worst = 0.0;
    worst = std::max(worst, symbol_vs_rhs_jacobian_max_err({1, 0, 0}));
    worst = std::max(worst, symbol_vs_rhs_jacobian_max_err({0, 1, 0}));
    worst = std::max(worst, symbol_vs_rhs_jacobian_max_err({0, 0, 1}));
    for (int it = 0; it < 2; ++it) {
      std::array<double, 3> xi{rng.centered(), rng.centered(), rng.centered()};
      const double nn =
          std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
      for (double& v : xi) v /= nn;
      worst = std::max(worst, symbol_vs_rhs_jacobian_max_err(xi));
    }
    std::snprintf(buf, sizeof buf,
                  "max |H J_fd - M| = %.3e over axes and sampled directions",
                  worst);
    add("symbol-jacobian", worst <= 1e-7, buf);
  }

  {
    Mat15 m = flux_form_matrix();
    if (hooks.flux_flip_sign)
      for (auto& row : m)
        for (double& v : row) v = -v;
    Eigen::Matrix<double, kSymbolDim, kSymbolDim> em;
    for (int r = 0; r < kSymbolDim; ++r)
      for (int c = 0; c < kSymbolDim; ++c) em(r, c) = m[r][c];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, kSymbolDim, kSymbolDim>>
        es(em, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    std::snprintf(buf, sizeof buf, "flux form eigenvalues in [%.6g, %.6g]", lo,
                  hi);
    add("flux-negative", hi <= 1e-12, buf);
  }

  {
    static constexpr int wall_slots[6] = {3, 4, 6, 7, 8, 9};
    Rng rng(12345);
    double qmax = 0.0;
    for (int it = 0; it < 1000; ++it) {
      double u[kSymbolDim], k6[6], g9[9];
      for (double& v : u) v = rng.centered();
      for (int w : wall_slots) u[w] = 0.0;
      symbol_to_kg(u, k6, g9);
      qmax = std::max(qmax, std::abs(boundary_flux_q(k6, g9)));
    }
    double agree = 0.0;
    const Mat15& m = flux_form_matrix();
    for (int it = 0; it < 500; ++it) {
      double u[kSymbolDim], k6[6], g9[9];
      for (double& v : u) v = rng.centered();
      symbol_to_kg(u, k6, g9);
      double umu = 0.0;
      for (int r = 0; r < kSymbolDim; ++r)
        for (int c = 0; c < kSymbolDim; ++c) umu += u[r] * m[r][c] * u[c];
      double k2 = 0.0;
      for (int sl = 0; sl < 6; ++sl)
        k2 += (kSym6I[sl] == kSym6J[sl] ? 1.0 : 2.0) * k6[sl] * k6[sl];
      double g2 = 0.0;
      for (int sl = 0; sl < 9; ++sl) g2 += 2.0 * g9[sl] * g9[sl];
      agree = std::max(agree, std::abs(boundary_flux_q(k6, g9) -
                                       (umu + 0.5 * k2 + 0.25 * g2)));
    }
    std::snprintf(buf, sizeof buf,
                  "max |Q| = %.17g under the wall conditions (1000 draws); "
                  "matrix/contraction agreement %.3e",
                  qmax, agree);
    add("flux-vanishing", qmax == 0.0 && agree <= 1e-13, buf);
  }

  {
    const GoodBadSplit& gb = classify_good_bad();
    const Mat15& a3 = principal_matrix(2);
    double worst_bad = 0.0;
    bool good_ok = true;
    for (const auto& combo : gb.bad) {
      for (int c = 0; c < kSymbolDim; ++c) {
        double acc = 0.0;
        for (int r = 0; r < kSymbolDim; ++r)
          acc += combo.second[r] * a3[r][c] / kSymmetrizerDiag[r];
        worst_bad = std::max(worst_bad, std::abs(acc));
      }
    }
    for (const auto& combo : gb.good) {
      double rowsum = 0.0;
      for (int c = 0; c < kSymbolDim; ++c) {
        double acc = 0.0;
        for (int r = 0; r < kSymbolDim; ++r)
          acc += combo.second[r] * a3[r][c] / kSymmetrizerDiag[r];
        rowsum += std::abs(acc);
      }
      if (rowsum == 0.0) good_ok = false;
    }
    std::snprintf(buf, sizeof buf,
                  "%zu recoverable / %zu tangential variables; max normal "
                  "content of tangential rows = %.17g",
                  gb.good.size(), gb.bad.size(), worst_bad);
    add("good-bad-structure",
        worst_bad == 0.0 && good_ok && gb.good.size() == 10 &&
            gb.bad.size() == 5,
        buf);
  }

  {
    // The Koszul connection built from discrete frame derivatives kills the
    // torsion identically: C = f(e f - e f) cancels term by term against the
    // antisymmetrized connection, independent of resolution.  So this is an
    // exactness statement, not an order measurement.
    Grid g;
    g.n = {12, 12, 12};
    g.h = {1.0 / 12, 1.0 / 12, 1.0 / 12};
    double errs[2];
    for (int l = 0; l < 2; ++l) {
      const StateField s = random_periodic_frame(g, 7, 0.04, 4);
      const std::vector<double> c = torsion(s, 4);
      errs[l] = parallel_max(c.size(),
                             [&](std::size_t q) { return std::abs(c[q]); });
      g = g.refined();
    }
    std::snprintf(buf, sizeof buf,
                  "max torsion %.3e and %.3e at two resolutions (identically "
                  "zero up to roundoff)",
                  errs[0], errs[1]);
    add("koszul-torsion-identity", errs[0] <= 1e-12 && errs[1] <= 1e-12, buf);
  }

  {
    // Curvature symmetries that do depend on vanishing torsion are only
    // approximate at finite resolution; check they converge away at the
    // stencil order.  12^3 is pre-asymptotic for these defects, so start
    // at 24^3.
    Grid g;
    g.n = {24, 24, 24};
    g.h = {1.0 / 24, 1.0 / 24, 1.0 / 24};
    double errs[2];
    for (int l = 0; l < 2; ++l) {
      const StateField s = random_periodic_frame(g, 7, 0.04, 4);
      const std::vector<double> ric = spatial_ricci_hat(s, 4);
      const std::size_t n = s.grid().npts();
      errs[l] = parallel_max(n, [&](std::size_t q) {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j)
            worst = std::max(
                worst, std::abs(ric[(3 * i + j) * n + q] -
                                ric[(3 * j + i) * n + q]));
        return worst;
      });
      g = g.refined();
    }
    const double order = std::log2(errs[0] / errs[1]);
    std::snprintf(buf, sizeof buf,
                  "Ricci antisymmetry defect %.3e -> %.3e under refinement, "
                  "order %.2f",
                  errs[0], errs[1], order);
    add("levi-civita-curvature", order >= 3.5, buf);
  }

  {
    Grid g;
    g.n = {20, 20, 20};
    g.h = {0.05, 0.05, 0.05};
    const StateField s = mms_state("trig01", g, 0.3);
    const NormalRecovery nr = normal_recovery(s, 4);
    double badmax = 0.0;
    for (double v : nr.bad_row_max) badmax = std::max(badmax, v);
    std::snprintf(buf, sizeof buf,
                  "max |reconstructed - direct| = %.3e; residual normal "
                  "content of tangential rows = %.3e",
                  nr.max_mismatch, badmax);
    add("normal-recovery", nr.max_mismatch <= 1e-9 && badmax <= 1e-9, buf);
  }

  suite.all_pass = true;
  for (const CheckItem& it : suite.items) suite.all_pass = suite.all_pass && it.pass;
  return suite;
}

}  // namespace gadm
