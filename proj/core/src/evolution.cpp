#include "gadm/evolution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>

#include "gadm/boundary.hpp"
#include "gadm/errors.hpp"
#include "gadm/hyperbolicity.hpp"
#include "gadm/parallel.hpp"
#include "gadm/stencil.hpp"

namespace gadm {

void rhs_point_kg(const double k6[6], const double g9[9], const double ek3[3][6],
                  const double eg3[3][9], double dk6[6], double dg9[9]) {
  double k[3][3], gam[3][3][3], ek[3][3][3], eg[3][3][3][3];
  expand_sym(k6, k);
  expand_gamma(g9, gam);
  for (int a = 0; a < 3; ++a) {
    expand_sym(ek3[a], ek[a]);
    double slots[3][3][3];
    expand_gamma(eg3[a], slots);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int b = 0; b < 3; ++b) eg[a][i][j][b] = slots[i][j][b];
  }

  const double trk = k[0][0] + k[1][1] + k[2][2];
  double k2 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k2 += k[i][j] * k[i][j];
  double gtr[3];  // G^b_b^c
  for (int c = 0; c < 3; ++c)
    gtr[c] = gam[0][0][c] + gam[1][1][c] + gam[2][2][c];

  // M_j = e^c K_cj - G_c^cl K_lj - G^c_j^l K_cl - e_j trK
  double mom[3];
  for (int j = 0; j < 3; ++j) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c) m += ek[c][c][j] - ek[j][c][c];
    for (int l = 0; l < 3; ++l) m -= gtr[l] * k[l][j];
    for (int c = 0; c < 3; ++c)
      for (int l = 0; l < 3; ++l) m -= gam[c][j][l] * k[c][l];
    mom[j] = m;
  }

  // X_ij = e_i G^b_jb - e^b G_ijb + G^b_i^c G_cjb + G^b_b^c G_ijc
  double X[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double x = 0.0;
      for (int b = 0; b < 3; ++b) x += eg[i][b][j][b] - eg[b][i][j][b];
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) x += gam[b][i][c] * gam[c][j][b];
      for (int c = 0; c < 3; ++c) x += gtr[c] * gam[i][j][c];
      X[i][j] = x;
    }
  }

  // 2 e^a G^b_ab + G^bac G_cab + G^b_b^c G^a_ac + |K|^2 - (trK)^2
  double sc = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) sc += 2.0 * eg[a][b][a][b];
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) sc += gam[b][a][c] * gam[c][a][b];
  for (int c = 0; c < 3; ++c) sc += gtr[c] * gtr[c];
  sc += k2 - trk * trk;

  for (int s = 0; s < 6; ++s) {
    const int i = kSym6I[s], j = kSym6J[s];
    double v = -trk * k[i][j] + 0.5 * (X[i][j] + X[j][i]);
    if (i == j) v -= 0.5 * sc;
    dk6[s] = v;
  }

  for (int i = 0; i < 3; ++i) {
    for (int p = 0; p < 3; ++p) {
      const int j = kPair3J[p], b = kPair3B[p];
      double v = ek[j][b][i] - ek[b][j][i];
      for (int c = 0; c < 3; ++c) {
        v -= k[i][c] * gam[c][j][b];
        v += -gam[j][b][c] * k[c][i] - gam[j][i][c] * k[b][c] +
             gam[b][j][c] * k[c][i] + gam[b][i][c] * k[j][c];
      }
      if (i == b) v += mom[j];
      if (i == j) v -= mom[b];
      dg9[3 * i + p] = v;
    }
  }
}

void rhs_point_frame(const double k6[6], const double f9[9],
                     const double fi9[9], double df9[9], double dfi9[9]) {
  double k[3][3];
  expand_sym(k6, k);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double a = 0.0, b = 0.0;
      for (int c = 0; c < 3; ++c) {
        a -= k[i][c] * f9[3 * c + j];
        b += k[c][i] * fi9[3 * c + j];
      }
      df9[3 * i + j] = a;
      dfi9[3 * i + j] = b;
    }
  }
}

Evolver::Evolver(const Grid& grid, const EvolveOptions& opts)
    : grid_(grid), opts_(opts) {
  auto problems = grid.validate(opts.fd_order);
  if (!problems.empty()) throw ConfigError(problems);
  const std::size_t n = grid.npts();
  ek_.resize(std::size_t(18) * n);
  eg_.resize(std::size_t(27) * n);
  p0_.resize(n);
  p1_.resize(n);
  p2_.resize(n);
}

void Evolver::eval_rhs(const StateField& s, double* out, const double* source) {
  eval_rhs_impl(s, out, source, false);
}

void Evolver::eval_rhs_no_e3(const StateField& s, double* out) {
  eval_rhs_impl(s, out, nullptr, true);
}

void Evolver::eval_rhs_impl(const StateField& s, double* out,
                            const double* source, bool zero_e3) {
  const Grid& g = s.grid();
  const std::size_t n = g.npts();
  const int fd = opts_.fd_order;

  // e_a of every evolved K and G component, layout [(a*ncomp + c)] * n
  auto sweep = [&](int comp0, int ncomp, std::vector<double>& buf) {
    for (int c = 0; c < ncomp; ++c) {
      const double* u = s.comp(comp0 + c);
      partial_derivative(g, u, 0, fd, p0_.data());
      partial_derivative(g, u, 1, fd, p1_.data());
      partial_derivative(g, u, 2, fd, p2_.data());
      parallel_for(n, [&](std::size_t qb, std::size_t qe) {
        for (int a = 0; a < 3; ++a) {
          const double* f0 = s.f(a, 0);
          const double* f1 = s.f(a, 1);
          const double* f2 = s.f(a, 2);
          double* o = buf.data() + std::size_t(a * ncomp + c) * n;
          for (std::size_t q = qb; q < qe; ++q)
            o[q] = f0[q] * p0_[q] + f1[q] * p1_[q] + f2[q] * p2_[q];
        }
      });
    }
  };
  sweep(CK, 6, ek_);
  sweep(CG, 9, eg_);
  if (zero_e3) {
    std::fill(ek_.begin() + std::size_t(12) * n, ek_.end(), 0.0);
    std::fill(eg_.begin() + std::size_t(18) * n, eg_.end(), 0.0);
  }

  std::atomic<std::size_t> firstbad{std::size_t(-1)};
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double k6[6], g9[9], f9[9], fi9[9];
      s.point_k6(q, k6);
      s.point_g9(q, g9);
      for (int c = 0; c < 9; ++c) {
        f9[c] = s.comp(CF + c)[q];
        fi9[c] = s.comp(CFI + c)[q];
      }
      double ek[3][6], eg[3][9];
      for (int a = 0; a < 3; ++a) {
        for (int c = 0; c < 6; ++c) ek[a][c] = ek_[std::size_t(a * 6 + c) * n + q];
        for (int c = 0; c < 9; ++c) eg[a][c] = eg_[std::size_t(a * 9 + c) * n + q];
      }
      double dk6[6], dg9[9], df9[9], dfi9[9];
      rhs_point_kg(k6, g9, ek, eg, dk6, dg9);
      rhs_point_frame(k6, f9, fi9, df9, dfi9);
      double tot = 0.0;
      for (int c = 0; c < 9; ++c) {
        out[std::size_t(CF + c) * n + q] = df9[c];
        out[std::size_t(CFI + c) * n + q] = dfi9[c];
        tot += df9[c] + dfi9[c];
      }
      for (int c = 0; c < 6; ++c) {
        out[std::size_t(CK + c) * n + q] = dk6[c];
        tot += dk6[c];
      }
      for (int c = 0; c < 9; ++c) {
        out[std::size_t(CG + c) * n + q] = dg9[c];
        tot += dg9[c];
      }
      if (!std::isfinite(tot)) {
        std::size_t cur = firstbad.load(std::memory_order_relaxed);
        while (q < cur &&
               !firstbad.compare_exchange_weak(cur, q, std::memory_order_relaxed)) {
        }
      }
    }
  });

  if (firstbad.load() != std::size_t(-1)) {
    const std::size_t q = firstbad.load();
    int comp = 0;
    for (int c = 0; c < NCOMP; ++c)
      if (!std::isfinite(out[std::size_t(c) * n + q])) {
        comp = c;
        break;
      }
    int i0, i1, i2;
    g.unravel(q, i0, i1, i2);
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "non-finite rhs for %s at point (%d,%d,%d), t=%.17g",
                  kCompNames[comp], i0, i1, i2, s.time());
    throw NumericalAbort("rhs", msg);
  }

  if (opts_.dissipation != 0.0) {
    for (int c = 0; c < NCOMP; ++c)
      add_dissipation(g, s.comp(c), opts_.dissipation,
                      out + std::size_t(c) * n);
  }
  if (source) {
    const std::size_t len = std::size_t(NCOMP) * n;
    parallel_for(len, [&](std::size_t b, std::size_t e) {
      for (std::size_t q = b; q < e; ++q) out[q] += source[q];
    });
  }
}

void Evolver::step_rk4(StateField& s, double dt, const SourceFn* source_fn) {
  const std::size_t len = s.size();
  const std::size_t n = s.npts();
  if (acc_.size() != len) {
    acc_.assign(len, 0.0);
    kcur_.assign(len, 0.0);
  }
  if (utmp_.size() != len) utmp_ = StateField(grid_);
  if (source_fn && src_.size() != len) src_.assign(len, 0.0);

  const double t0 = s.time();
  const double ctime[4] = {0.0, 0.5, 0.5, 1.0};
  const double cnext[3] = {0.5, 0.5, 1.0};
  const double wgt[4] = {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};

  const double* u0 = s.data();
  double* acc = acc_.data();
  double* kc = kcur_.data();
  for (int st = 0; st < 4; ++st) {
    const StateField& stage = (st == 0) ? s : utmp_;
    if (source_fn) (*source_fn)(t0 + ctime[st] * dt, src_.data());
    eval_rhs(stage, kc, source_fn ? src_.data() : nullptr);
    const double w = wgt[st];
    if (st < 3) {
      const double a = cnext[st] * dt;
      double* un = utmp_.data();
      if (st == 0) {
        parallel_for(len, [&](std::size_t b, std::size_t e) {
          for (std::size_t q = b; q < e; ++q) {
            acc[q] = w * kc[q];
            un[q] = u0[q] + a * kc[q];
          }
        });
      } else {
        parallel_for(len, [&](std::size_t b, std::size_t e) {
          for (std::size_t q = b; q < e; ++q) {
            acc[q] += w * kc[q];
            un[q] = u0[q] + a * kc[q];
          }
        });
      }
      utmp_.set_time(t0 + cnext[st] * dt);
      if (opts_.geodesic_boundary) impose_wall_conditions(utmp_);
    } else {
      double* us = s.data();
      parallel_for(len, [&](std::size_t b, std::size_t e) {
        for (std::size_t q = b; q < e; ++q) us[q] += dt * (acc[q] + w * kc[q]);
      });
    }
  }
  s.set_time(t0 + dt);
  if (opts_.geodesic_boundary) impose_wall_conditions(s);

  const double* us = s.data();
  const double finite_probe = parallel_max(
      len, [&](std::size_t q) { return std::isfinite(us[q]) ? 0.0 : 1.0; });
  if (finite_probe > 0.5) {
    for (std::size_t q = 0; q < len; ++q) {
      if (!std::isfinite(us[q])) {
        const int comp = int(q / n);
        int i0, i1, i2;
        grid_.unravel(q % n, i0, i1, i2);
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "non-finite %s at point (%d,%d,%d), t=%.17g",
                      kCompNames[comp], i0, i1, i2, s.time());
        throw NumericalAbort("step", msg);
      }
    }
  }
  const double worst_det = -parallel_max(
      n, [&](std::size_t q) { return -std::fabs(det_f(s, q)); });
  if (worst_det < opts_.det_floor) {
    std::size_t qmin = 0;
    double dmin = std::fabs(det_f(s, 0));
    for (std::size_t q = 1; q < n; ++q) {
      const double d = std::fabs(det_f(s, q));
      if (d < dmin) {
        dmin = d;
        qmin = q;
      }
    }
    int i0, i1, i2;
    grid_.unravel(qmin, i0, i1, i2);
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "|det f| = %.3e below floor %.3e at point (%d,%d,%d), t=%.17g",
                  dmin, opts_.det_floor, i0, i1, i2, s.time());
    throw NumericalAbort("step", msg);
  }
}

double cfl_dt(const Grid& grid, double cfl_factor) {
  const double hmin = std::min({grid.h[0], grid.h[1], grid.h[2]});
  return cfl_factor * hmin / std::max(1.0, max_characteristic_speed());
}

}  // namespace gadm
