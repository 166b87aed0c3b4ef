#include "gadm/geometry.hpp"

#include <vector>

#include "gadm/frame.hpp"
#include "gadm/parallel.hpp"
#include "gadm/stencil.hpp"

namespace gadm {

namespace {

// Frame derivatives e_a of a contiguous run of state components.
// Result slot [(a*ncomp + c)] * n holds e_a(comp0 + c).
std::vector<double> frame_derivs(const StateField& s, int comp0, int ncomp,
                                 int fd_order) {
  const Grid& g = s.grid();
  const std::size_t n = g.npts();
  std::vector<double> out(std::size_t(3 * ncomp) * n);
  std::vector<double> p0(n), p1(n), p2(n);
  for (int c = 0; c < ncomp; ++c) {
    const double* u = s.comp(comp0 + c);
    partial_derivative(g, u, 0, fd_order, p0.data());
    partial_derivative(g, u, 1, fd_order, p1.data());
    partial_derivative(g, u, 2, fd_order, p2.data());
    parallel_for(n, [&](std::size_t b, std::size_t e) {
      for (int a = 0; a < 3; ++a) {
        const double* f0 = s.f(a, 0);
        const double* f1 = s.f(a, 1);
        const double* f2 = s.f(a, 2);
        double* o = out.data() + std::size_t(a * ncomp + c) * n;
        for (std::size_t q = b; q < e; ++q)
          o[q] = f0[q] * p0[q] + f1[q] * p1[q] + f2[q] * p2[q];
      }
    });
  }
  return out;
}

// Expands the 9 e_a(G-slot) values at one point into eg[a][i][j][b].
void expand_egamma(const std::vector<double>& eG, std::size_t n, std::size_t q,
                   double eg[3][3][3][3]) {
  for (int a = 0; a < 3; ++a) {
    double slots[9];
    for (int c = 0; c < 9; ++c) slots[c] = eG[std::size_t(a * 9 + c) * n + q];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int b = 0; b < 3; ++b)
          eg[a][i][j][b] =
              (j == b) ? 0.0 : pair_sign(j, b) * slots[3 * i + pair3(j, b)];
  }
}

void expand_ek(const std::vector<double>& eK, std::size_t n, std::size_t q,
               double ek[3][3][3]) {
  for (int a = 0; a < 3; ++a) {
    double slots[6];
    for (int c = 0; c < 6; ++c) slots[c] = eK[std::size_t(a * 6 + c) * n + q];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ek[a][i][j] = slots[sym6(i, j)];
  }
}

}  // namespace

std::vector<double> torsion(const StateField& s, int fd_order) {
  const Grid& g = s.grid();
  const std::size_t n = g.npts();
  // E slot [(a*9 + (3*j+l))] * n = e_a f_j^l
  std::vector<double> E = frame_derivs(s, CF, 9, fd_order);
  std::vector<double> out(std::size_t(9) * n);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double fi[3][3], gam[3][3][3], g9[9];
      s.point_finv(q, fi);
      s.point_g9(q, g9);
      expand_gamma(g9, gam);
      double E3[3][3][3];
      for (int a = 0; a < 3; ++a)
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l)
            E3[a][j][l] = E[std::size_t(a * 9 + 3 * j + l) * n + q];
      for (int p = 0; p < 3; ++p) {
        const int i = kPair3J[p], j = kPair3B[p];
        for (int b = 0; b < 3; ++b) {
          double acc = 0.0;
          for (int l = 0; l < 3; ++l)
            acc += fi[b][l] * (E3[i][j][l] - E3[j][i][l]);
          acc -= gam[i][j][b] - gam[j][i][b];
          out[std::size_t(3 * p + b) * n + q] = acc;
        }
      }
    }
  });
  return out;
}

std::vector<double> spatial_ricci_hat(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  std::vector<double> eG = frame_derivs(s, CG, 9, fd_order);
  std::vector<double> out(std::size_t(9) * n);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double g9[9], gam[3][3][3], eg[3][3][3][3];
      s.point_g9(q, g9);
      expand_gamma(g9, gam);
      expand_egamma(eG, n, q, eg);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          double t1 = 0.0, t2 = 0.0, q1 = 0.0, q2 = 0.0;
          for (int b = 0; b < 3; ++b) {
            t1 += eg[i][b][j][b];
            t2 += eg[b][i][j][b];
            for (int c = 0; c < 3; ++c) {
              q1 += gam[b][i][c] * gam[c][j][b];
              q2 += gam[b][b][c] * gam[i][j][c];
            }
          }
          out[std::size_t(3 * i + j) * n + q] = -(t1 - t2 + q1 + q2);
        }
      }
    }
  });
  return out;
}

std::vector<double> spatial_scalar(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  std::vector<double> eG = frame_derivs(s, CG, 9, fd_order);
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double g9[9], gam[3][3][3], eg[3][3][3][3];
      s.point_g9(q, g9);
      expand_gamma(g9, gam);
      expand_egamma(eG, n, q, eg);
      double s1 = 0.0, s2 = 0.0, s3 = 0.0;
      for (int c = 0; c < 3; ++c) {
        double gtr = 0.0;
        for (int b = 0; b < 3; ++b) gtr += gam[b][b][c];
        s3 += gtr * gtr;
      }
      for (int j = 0; j < 3; ++j)
        for (int b = 0; b < 3; ++b) {
          s1 += eg[j][b][j][b];
          for (int c = 0; c < 3; ++c) s2 += gam[b][j][c] * gam[c][j][b];
        }
      out[q] = -(2.0 * s1 + s2 + s3);
    }
  });
  return out;
}

std::vector<double> hamiltonian_residual(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  std::vector<double> out = spatial_scalar(s, fd_order);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double k6[6], k[3][3];
      s.point_k6(q, k6);
      expand_sym(k6, k);
      double nrm = 0.0, tr = k[0][0] + k[1][1] + k[2][2];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) nrm += k[i][j] * k[i][j];
      out[q] += -nrm + tr * tr;
    }
  });
  return out;
}

std::vector<double> momentum_residual(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  std::vector<double> eK = frame_derivs(s, CK, 6, fd_order);
  std::vector<double> out(std::size_t(3) * n);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double k6[6], k[3][3], g9[9], gam[3][3][3], ek[3][3][3];
      s.point_k6(q, k6);
      expand_sym(k6, k);
      s.point_g9(q, g9);
      expand_gamma(g9, gam);
      expand_ek(eK, n, q, ek);
      double gtr[3];
      for (int l = 0; l < 3; ++l) {
        gtr[l] = 0.0;
        for (int c = 0; c < 3; ++c) gtr[l] += gam[c][c][l];
      }
      for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (int c = 0; c < 3; ++c) {
          acc += ek[c][c][j];          // e^c K_cj
          acc -= ek[j][c][c];          // e_j trK
          acc -= gtr[c] * k[c][j];     // G_c^cl K_lj
          for (int l = 0; l < 3; ++l)
            acc -= gam[c][j][l] * k[c][l];  // G^c_j^l K_cl
        }
        out[std::size_t(j) * n + q] = acc;
      }
    }
  });
  return out;
}

std::vector<double> riemann_hat(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  std::vector<double> eG = frame_derivs(s, CG, 9, fd_order);
  std::vector<double> out(std::size_t(81) * n);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double g9[9], gam[3][3][3], eg[3][3][3][3];
      s.point_g9(q, g9);
      expand_gamma(g9, gam);
      expand_egamma(eG, n, q, eg);
      for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int b = 0; b < 3; ++b) {
              double acc = eg[a][i][j][b] - eg[i][a][j][b];
              for (int c = 0; c < 3; ++c) {
                acc -= gam[a][b][c] * gam[i][j][c];
                acc += gam[i][b][c] * gam[a][j][c];
                acc -= gam[a][i][c] * gam[c][j][b];
                acc += gam[i][a][c] * gam[c][j][b];
              }
              out[std::size_t(((a * 3 + i) * 3 + j) * 3 + b) * n + q] = acc;
            }
    }
  });
  return out;
}

std::vector<double> torsion_rhs(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  std::vector<double> C = torsion(s, fd_order);
  std::vector<double> R = momentum_residual(s, fd_order);
  std::vector<double> out(std::size_t(9) * n);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double k6[6], k[3][3];
      s.point_k6(q, k6);
      expand_sym(k6, k);
      double c[3][3][3];  // full torsion, antisym first pair
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int b = 0; b < 3; ++b)
            c[i][j][b] = (i == j)
                             ? 0.0
                             : pair_sign(i, j) *
                                   C[std::size_t(3 * pair3(i, j) + b) * n + q];
      double r[3];
      for (int j = 0; j < 3; ++j) r[j] = R[std::size_t(j) * n + q];
      for (int p = 0; p < 3; ++p) {
        const int i = kPair3J[p], j = kPair3B[p];
        for (int b = 0; b < 3; ++b) {
          double acc = 0.0;
          for (int l = 0; l < 3; ++l) {
            acc += k[b][l] * c[i][j][l];
            acc -= k[i][l] * c[l][j][b];
            acc -= k[j][l] * c[i][l][b];
          }
          if (i == b) acc -= r[j];
          if (j == b) acc += r[i];
          out[std::size_t(3 * p + b) * n + q] = acc;
        }
      }
    }
  });
  return out;
}

}  // namespace gadm
