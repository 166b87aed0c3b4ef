#include "gadm/frame.hpp"

#include "gadm/parallel.hpp"

namespace gadm {

void frame_derivative(const StateField& s, const double* u, int i,
                      int fd_order, double* out) {
  const Grid& g = s.grid();
  const std::size_t n = g.npts();
  std::vector<double> p(n);
  // accumulate f_i^j d_j u over the three coordinate axes
  for (int j = 0; j < 3; ++j) {
    partial_derivative(g, u, j, fd_order, p.data());
    const double* fij = s.f(i, j);
    if (j == 0) {
      parallel_for(n, [&](std::size_t b, std::size_t e) {
        for (std::size_t q = b; q < e; ++q) out[q] = fij[q] * p[q];
      });
    } else {
      parallel_for(n, [&](std::size_t b, std::size_t e) {
        for (std::size_t q = b; q < e; ++q) out[q] += fij[q] * p[q];
      });
    }
  }
}

void frame_derivatives_all(const StateField& s, const double* u, int fd_order,
                           const std::array<double*, 3>& out) {
  const Grid& g = s.grid();
  const std::size_t n = g.npts();
  std::vector<double> p0(n), p1(n), p2(n);
  partial_derivative(g, u, 0, fd_order, p0.data());
  partial_derivative(g, u, 1, fd_order, p1.data());
  partial_derivative(g, u, 2, fd_order, p2.data());
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (int i = 0; i < 3; ++i) {
      const double* f0 = s.f(i, 0);
      const double* f1 = s.f(i, 1);
      const double* f2 = s.f(i, 2);
      double* o = out[i];
      for (std::size_t q = b; q < e; ++q)
        o[q] = f0[q] * p0[q] + f1[q] * p1[q] + f2[q] * p2[q];
    }
  });
}

std::vector<double> connection_from_frame(const StateField& s, int fd_order) {
  const Grid& g = s.grid();
  const std::size_t n = g.npts();

  // E[i][j][l] = e_i f_j^l, from coordinate partials of all 9 f components.
  std::vector<double> E(27 * n);
  auto Efield = [&](int i, int j, int l) -> double* {
    return E.data() + std::size_t((i * 3 + j) * 3 + l) * n;
  };
  {
    std::vector<double> p0(n), p1(n), p2(n);
    for (int j = 0; j < 3; ++j) {
      for (int l = 0; l < 3; ++l) {
        const double* fjl = s.f(j, l);
        partial_derivative(g, fjl, 0, fd_order, p0.data());
        partial_derivative(g, fjl, 1, fd_order, p1.data());
        partial_derivative(g, fjl, 2, fd_order, p2.data());
        parallel_for(n, [&](std::size_t b, std::size_t e) {
          for (int i = 0; i < 3; ++i) {
            const double* f0 = s.f(i, 0);
            const double* f1 = s.f(i, 1);
            const double* f2 = s.f(i, 2);
            double* o = Efield(i, j, l);
            for (std::size_t q = b; q < e; ++q)
              o[q] = f0[q] * p0[q] + f1[q] * p1[q] + f2[q] * p2[q];
          }
        });
      }
    }
  }

  std::vector<double> out(9 * n);
  parallel_for(n, [&](std::size_t qb, std::size_t qe) {
    for (std::size_t q = qb; q < qe; ++q) {
      double fi[3][3];
      s.point_finv(q, fi);
      double Ept[3][3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l) Ept[i][j][l] = Efield(i, j, l)[q];
      // comm(i,j,b) = <[e_i,e_j], e_b> = f^b_l (e_i f_j^l - e_j f_i^l)
      auto comm = [&](int i, int j, int b) {
        double acc = 0.0;
        for (int l = 0; l < 3; ++l)
          acc += fi[b][l] * (Ept[i][j][l] - Ept[j][i][l]);
        return acc;
      };
      for (int i = 0; i < 3; ++i) {
        for (int p = 0; p < 3; ++p) {
          const int j = kPair3J[p], b = kPair3B[p];
          out[std::size_t(3 * i + p) * n + q] =
              0.5 * (comm(i, j, b) - comm(j, b, i) + comm(b, i, j));
        }
      }
    }
  });
  return out;
}

}  // namespace gadm
