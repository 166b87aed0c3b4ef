#include "gadm/scenarios.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "gadm/errors.hpp"
#include "gadm/frame.hpp"
#include "gadm/parallel.hpp"

namespace gadm {

namespace {

constexpr double kPi = 3.14159265358979323846;

void fill_identity_frame(StateField& s) {
  const std::size_t n = s.npts();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double v = i == j ? 1.0 : 0.0;
      double* f = s.f(i, j);
      double* fi = s.finv(i, j);
      parallel_for(n, [&](std::size_t b, std::size_t e) {
        for (std::size_t q = b; q < e; ++q) {
          f[q] = v;
          fi[q] = v;
        }
      });
    }
}

// 64-bit xorshift*, used instead of <random> distributions so seeded data
// is reproducible independent of the standard library build.
struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double uniform() {  // in [0, 1)
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return double((s * 0x2545f4914f6cdd1dull) >> 11) * 0x1.0p-53;
  }
  double centered() { return 2.0 * uniform() - 1.0; }
  int integer(int lo, int hi) {  // inclusive
    return lo + int(uniform() * (hi - lo + 1));
  }
};

}  // namespace

StateField minkowski(const Grid& g) {
  StateField s(g, 0.0);
  fill_identity_frame(s);
  return s;
}

StateField kasner(const Grid& g, const std::array<double, 3>& p, double t0) {
  const double s1 = p[0] + p[1] + p[2];
  const double s2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  if (std::abs(s1 - 1.0) > 1e-12 || std::abs(s2 - 1.0) > 1e-12) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "kasner exponents must satisfy sum p = sum p^2 = 1: "
                  "sum p = %.17g, sum p^2 = %.17g",
                  s1, s2);
    throw ConfigError(msg);
  }
  if (!(t0 > 0.0)) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "kasner start time must be positive, got %.17g", t0);
    throw ConfigError(msg);
  }

  StateField s(g, t0);
  const std::size_t n = s.npts();
  for (int i = 0; i < 3; ++i) {
    const double fv = std::pow(t0, -p[i]);
    const double fiv = std::pow(t0, p[i]);
    const double kv = p[i] / t0;
    double* f = s.f(i, i);
    double* fi = s.finv(i, i);
    double* k = s.k(i, i);
    parallel_for(n, [&](std::size_t b, std::size_t e) {
      for (std::size_t q = b; q < e; ++q) {
        f[q] = fv;
        fi[q] = fiv;
        k[q] = kv;
      }
    });
  }
  return s;
}

StateField perturbed_kasner(const Grid& g, const std::array<double, 3>& p,
                            double t0, double amplitude) {
  StateField s = kasner(g, p, t0);
  if (amplitude == 0.0) return s;

  const double len = g.extent(2);
  const double per1 = g.extent(0);
  const double per2 = g.extent(1);
  double* k11 = s.k(0, 0);
  double* k22 = s.k(1, 1);
  parallel_for(g.npts(), [&](std::size_t b, std::size_t e) {
    for (std::size_t q = b; q < e; ++q) {
      int i0, i1, i2;
      g.unravel(q, i0, i1, i2);
      const double z = g.h[2] * i2;
      double bump = 4.0 * z * (len - z) / (len * len);
      bump = bump * bump;       // ^2
      bump = bump * bump;       // ^4
      bump = bump * bump;       // ^8
      const double mod = 1.0 + 0.5 * std::cos(2.0 * kPi * g.x(0, i0) / per1) *
                                   std::cos(2.0 * kPi * g.x(1, i1) / per2);
      const double dk = amplitude * bump * mod;
      k11[q] += dk;
      k22[q] -= dk;
    }
  });
  return s;
}

StateField from_geometric_data(const Grid& g, const std::vector<double>& h6,
                               const std::vector<double>& k6, int fd_order) {
  const std::size_t n = g.npts();
  if (h6.size() != 6 * n || k6.size() != 6 * n) {
    char msg[128];
    std::snprintf(msg, sizeof msg,
                  "geometric data must hold 6 fields of %zu points: got %zu and %zu values",
                  n, h6.size(), k6.size());
    throw ConfigError(msg);
  }

  StateField s(g, 0.0);
  std::atomic<std::size_t> first_bad{std::size_t(-1)};
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t q = b; q < e; ++q) {
      double h[3][3], kk[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          h[i][j] = h6[std::size_t(sym6(i, j)) * n + q];
          kk[i][j] = k6[std::size_t(sym6(i, j)) * n + q];
        }

      // Gram-Schmidt of the coordinate basis against h, tangents first:
      // e_i = f_i^j d_j with f lower triangular, so e_1, e_2 span the
      // tangential directions and e_3 is the unit normal of the x3 faces.
      double f[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        double v[3] = {0, 0, 0};
        v[i] = 1.0;
        for (int m = 0; m < i; ++m) {
          double dot = 0.0;
          for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c) dot += f[m][a] * h[a][c] * v[c];
          for (int c = 0; c < 3; ++c) v[c] -= dot * f[m][c];
        }
        double nrm2 = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int c = 0; c < 3; ++c) nrm2 += v[a] * h[a][c] * v[c];
        if (!(nrm2 > 0.0)) {
          ok = false;
          break;
        }
        const double inv = 1.0 / std::sqrt(nrm2);
        for (int c = 0; c < 3; ++c) f[i][c] = v[c] * inv;
      }
      if (!ok) {
        std::size_t prev = first_bad.load(std::memory_order_relaxed);
        while (q < prev &&
               !first_bad.compare_exchange_weak(prev, q, std::memory_order_relaxed)) {
        }
        continue;
      }

      // f is lower triangular with positive diagonal: invert by forward
      // substitution, then f^b_j = (f^{-1})_j^b.
      double fi[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
      for (int b = 0; b < 3; ++b) {
        fi[b][b] = 1.0 / f[b][b];
        for (int j = b + 1; j < 3; ++j) {
          double acc = 0.0;
          for (int m = b; m < j; ++m) acc += f[j][m] * fi[b][m];
          fi[b][j] = -acc / f[j][j];
        }
      }

      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          s.f(i, j)[q] = f[i][j];
          s.finv(i, j)[q] = fi[i][j];
        }
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          double v = 0.0;
          for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c) v += f[i][a] * f[j][c] * kk[a][c];
          s.k(i, j)[q] = v;
        }
    }
  });

  if (first_bad.load() != std::size_t(-1)) {
    int i0, i1, i2;
    g.unravel(first_bad.load(), i0, i1, i2);
    char msg[128];
    std::snprintf(msg, sizeof msg,
                  "metric not positive definite at point (%d,%d,%d)", i0, i1, i2);
    throw ConfigError(msg);
  }

  const std::vector<double> gam = connection_from_frame(s, fd_order);
  std::memcpy(s.comp(CG), gam.data(), 9 * n * sizeof(double));
  return s;
}

std::vector<double> induced_metric(const StateField& s) {
  const std::size_t n = s.npts();
  std::vector<double> h6(6 * n);
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t q = b; q < e; ++q) {
      double fi[3][3];
      s.point_finv(q, fi);
      for (int a = 0; a < 3; ++a)
        for (int c = a; c < 3; ++c) {
          double v = 0.0;
          for (int i = 0; i < 3; ++i) v += fi[i][a] * fi[i][c];
          h6[std::size_t(sym6(a, c)) * n + q] = v;
        }
    }
  });
  return h6;
}

StateField random_periodic_frame(const Grid& g, unsigned long long seed,
                                 double amplitude, int fd_order) {
  Rng rng(seed);
  // A handful of low-frequency modes per frame entry; total amplitude is
  // capped so f stays within 3*amplitude of the identity in max norm.
  struct Mode {
    double amp, phase;
    int m[3];
  };
  Mode modes[9][3];
  for (int c = 0; c < 9; ++c)
    for (int w = 0; w < 3; ++w) {
      Mode& md = modes[c][w];
      md.amp = amplitude * rng.centered();
      md.phase = 2.0 * kPi * rng.uniform();
      for (int a = 0; a < 3; ++a) md.m[a] = rng.integer(-2, 2);
    }

  StateField s(g, 0.0);
  const std::size_t n = g.npts();
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t q = b; q < e; ++q) {
      int iv[3];
      g.unravel(q, iv[0], iv[1], iv[2]);
      double u[3];
      for (int a = 0; a < 3; ++a) u[a] = g.x(a, iv[a]) / g.extent(a);

      double f[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double v = i == j ? 1.0 : 0.0;
          for (int w = 0; w < 3; ++w) {
            const Mode& md = modes[3 * i + j][w];
            v += md.amp * std::sin(2.0 * kPi * (md.m[0] * u[0] + md.m[1] * u[1] +
                                                md.m[2] * u[2]) +
                                   md.phase);
          }
          f[i][j] = v;
        }

      const double det = f[0][0] * (f[1][1] * f[2][2] - f[1][2] * f[2][1]) -
                         f[0][1] * (f[1][0] * f[2][2] - f[1][2] * f[2][0]) +
                         f[0][2] * (f[1][0] * f[2][1] - f[1][1] * f[2][0]);
      const double inv = 1.0 / det;
      double fi[3][3];
      fi[0][0] = inv * (f[1][1] * f[2][2] - f[1][2] * f[2][1]);
      fi[1][0] = -inv * (f[0][1] * f[2][2] - f[0][2] * f[2][1]);
      fi[2][0] = inv * (f[0][1] * f[1][2] - f[0][2] * f[1][1]);
      fi[0][1] = -inv * (f[1][0] * f[2][2] - f[1][2] * f[2][0]);
      fi[1][1] = inv * (f[0][0] * f[2][2] - f[0][2] * f[2][0]);
      fi[2][1] = -inv * (f[0][0] * f[1][2] - f[0][2] * f[1][0]);
      fi[0][2] = inv * (f[1][0] * f[2][1] - f[1][1] * f[2][0]);
      fi[1][2] = -inv * (f[0][0] * f[2][1] - f[0][1] * f[2][0]);
      fi[2][2] = inv * (f[0][0] * f[1][1] - f[0][1] * f[1][0]);

      // fi[b][j] = (f^{-1})_j^b so that f_i^j f^b_j = delta_i^b.
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          s.f(i, j)[q] = f[i][j];
          s.finv(i, j)[q] = fi[i][j];
        }
    }
  });

  const std::vector<double> gam = connection_from_frame(s, fd_order);
  std::memcpy(s.comp(CG), gam.data(), 9 * n * sizeof(double));
  return s;
}

}  // namespace gadm
