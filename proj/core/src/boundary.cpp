#include "gadm/boundary.hpp"

#include <cmath>

#include "gadm/errors.hpp"
#include "gadm/frame.hpp"
#include "gadm/geometry.hpp"
#include "gadm/parallel.hpp"

namespace gadm {

const std::array<int, 6> kWallComps = {
    CK + sym6(0, 2),  // K_13
    CK + sym6(1, 2),  // K_23
    CG + 0 * 3 + 1,   // G_113
    CG + 0 * 3 + 2,   // G_123
    CG + 1 * 3 + 1,   // G_213
    CG + 1 * 3 + 2,   // G_223
};

void impose_wall_conditions(StateField& s) {
  const Grid& g = s.grid();
  if (!g.has_boundary())
    throw ConfigError("impose_wall_conditions: grid has no boundary faces");
  const std::size_t nface = std::size_t(g.n[0]) * g.n[1];
  const int faces[2] = {0, g.n[2] - 1};
  for (int c : kWallComps) {
    double* u = s.comp(c);
    parallel_for(nface, [&](std::size_t b, std::size_t e) {
      for (std::size_t fq = b; fq < e; ++fq) {
        const int i0 = int(fq / g.n[1]);
        const int i1 = int(fq % g.n[1]);
        u[g.idx(i0, i1, faces[0])] = 0.0;
        u[g.idx(i0, i1, faces[1])] = 0.0;
      }
    });
  }
}

double boundary_flux_q(const double k6[6], const double g9[9]) {
  double k[3][3], gam[3][3][3];
  expand_sym(k6, k);
  expand_gamma(g9, gam);
  const double trk = k[0][0] + k[1][1] + k[2][2];
  double q = 0.0;
  for (int j = 0; j < 3; ++j) {
    double gtrj = 0.0;  // G^b_jb
    for (int b = 0; b < 3; ++b) gtrj += gam[b][j][b];
    q += k[2][j] * gtrj;
  }
  double gtr3 = 0.0;  // G^b_3b
  for (int b = 0; b < 3; ++b) gtr3 += gam[b][2][b];
  q -= trk * gtr3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q -= gam[i][j][2] * k[i][j];
  return q;
}

const Mat15& flux_form_matrix() {
  static const Mat15 m = [] {
    Mat15 a{};
    // -1/2 |K|^2: off-diagonal K slots carry multiplicity 2
    const double kd[6] = {0.5, 1.0, 0.5, 1.0, 1.0, 0.5};
    for (int i = 0; i < 6; ++i) a[i][i] = -kd[i];
    for (int i = 6; i < kSymbolDim; ++i) a[i][i] = -0.5;  // -1/4 |G|^2
    // Q = K13 G212 - K23 G112 + K11 G223 + K22 G113 - K12 (G123 + G213)
    auto add = [&](int r, int c, double v) {
      a[r][c] += 0.5 * v;
      a[c][r] += 0.5 * v;
    };
    add(3, 14, 1.0);   // K13 G212
    add(4, 13, -1.0);  // K23 G112
    add(0, 7, 1.0);    // K11 G223
    add(2, 6, 1.0);    // K22 G113
    add(1, 8, -1.0);   // K12 G123
    add(1, 9, -1.0);   // K12 G213
    return a;
  }();
  return m;
}

CornerResiduals corner_residuals(const StateField& s, int fd_order) {
  const Grid& g = s.grid();
  if (!g.has_boundary())
    throw ConfigError("corner_residuals: grid has no boundary faces");
  const std::size_t n = g.npts();

  // e_3 of G212, G112, K22, K11, K12; e_1 and e_2 of G312
  const int e3comps[5] = {CG + 3, CG + 0, CK + 3, CK + 0, CK + 1};
  std::vector<double> d3(std::size_t(5) * n), d312(std::size_t(3) * n);
  for (int c = 0; c < 5; ++c)
    frame_derivative(s, s.comp(e3comps[c]), 2, fd_order, d3.data() + c * n);
  frame_derivatives_all(s, s.comp(CG + 6), fd_order,
                        {d312.data(), d312.data() + n, d312.data() + 2 * n});

  CornerResiduals out;
  out.n0 = g.n[0];
  out.n1 = g.n[1];
  out.nfaces = 2;
  const std::size_t nf = std::size_t(out.nfaces) * out.n0 * out.n1;
  out.r.assign(4 * nf, 0.0);
  out.max_abs = {0.0, 0.0, 0.0, 0.0};
  const int faces[2] = {0, g.n[2] - 1};
  for (int fc = 0; fc < 2; ++fc) {
    for (int i0 = 0; i0 < g.n[0]; ++i0) {
      for (int i1 = 0; i1 < g.n[1]; ++i1) {
        const std::size_t q = g.idx(i0, i1, faces[fc]);
        const double g112 = s.comp(CG + 0)[q], g212 = s.comp(CG + 3)[q];
        const double g312 = s.comp(CG + 6)[q], g313 = s.comp(CG + 7)[q];
        const double g323 = s.comp(CG + 8)[q];
        const double k11 = s.comp(CK + 0)[q], k12 = s.comp(CK + 1)[q];
        const double k22 = s.comp(CK + 3)[q];
        const double rg1 =
            d3[0 * n + q] - d312[1 * n + q] + (g112 - g323) * g312;
        const double rg2 =
            -d3[1 * n + q] + d312[0 * n + q] + (g212 + g313) * g312;
        const double rv[4] = {std::sqrt(rg1 * rg1 + rg2 * rg2),
                              d3[2 * n + q] + 2.0 * g312 * k12,
                              d3[3 * n + q] - 2.0 * g312 * k12,
                              d3[4 * n + q] + g312 * (k11 - k22)};
        const std::size_t fq =
            (std::size_t(fc) * g.n[0] + i0) * g.n[1] + i1;
        for (int sl = 0; sl < 4; ++sl) {
          out.r[sl * nf + fq] = rv[sl];
          if (std::fabs(rv[sl]) > out.max_abs[sl])
            out.max_abs[sl] = std::fabs(rv[sl]);
        }
      }
    }
  }
  return out;
}

std::array<double, 2> corner_residuals_angle(const AngleCornerInput& in) {
  return {in.k_xy * std::sinh(in.omega) - in.sff_xy * std::cosh(in.omega),
          in.k_xn - in.domega};
}

std::vector<double> wall_ricci_30(const StateField& s, int fd_order) {
  const Grid& g = s.grid();
  if (!g.has_boundary())
    throw ConfigError("wall_ricci_30: grid has no boundary faces");
  const std::size_t n = g.npts();
  std::vector<double> mom = momentum_residual(s, fd_order);
  const double* m3 = mom.data() + 2 * n;
  std::vector<double> out(std::size_t(2) * g.n[0] * g.n[1]);
  const int faces[2] = {0, g.n[2] - 1};
  std::size_t w = 0;
  for (int fc = 0; fc < 2; ++fc)
    for (int i0 = 0; i0 < g.n[0]; ++i0)
      for (int i1 = 0; i1 < g.n[1]; ++i1)
        out[w++] = std::fabs(m3[g.idx(i0, i1, faces[fc])]);
  return out;
}

double wall_ricci_30_max(const StateField& s, int fd_order) {
  const std::vector<double> v = wall_ricci_30(s, fd_order);
  double m = 0.0;
  for (double x : v)
    if (x > m) m = x;
  return m;
}

}  // namespace gadm
