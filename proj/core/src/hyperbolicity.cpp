#include "gadm/hyperbolicity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gadm/errors.hpp"
#include "gadm/evolution.hpp"
#include "gadm/frame.hpp"

namespace gadm {

const std::array<const char*, kSymbolDim> kSymbolNames = {
    "K11", "K12", "K22", "K13", "K23", "K33", "G113", "G223",
    "G123", "G213", "G313", "G323", "G312", "G112", "G212"};

const std::array<int, kSymbolDim> kSymbolSlot = {
    0, 1, 3, 2, 4, 5,                                // K slots
    6 + 1, 6 + 5, 6 + 2, 6 + 4, 6 + 7, 6 + 8, 6 + 6, 6 + 0, 6 + 3};

const std::array<double, kSymbolDim> kSymmetrizerDiag = {
    1, 2, 1, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

namespace {

struct UpperEntry {
  int r, c, v;
};

// Upper-triangle entries of the symmetric A matrices, read off the
// linearized equations row by row (time-derivative factors live in the
// symmetrizer, not here).
constexpr UpperEntry kA1[] = {{1, 11, 1}, {2, 10, -1}, {3, 7, -1},
                              {4, 9, 1},  {4, 12, 1},  {5, 14, -1}};
constexpr UpperEntry kA2[] = {{0, 11, -1}, {1, 10, 1}, {3, 8, 1},
                              {3, 12, -1}, {4, 6, -1}, {5, 13, 1}};
constexpr UpperEntry kA3[] = {{0, 7, 1},  {1, 8, -1}, {1, 9, -1},
                              {2, 6, 1},  {3, 14, 1}, {4, 13, -1}};

Mat15 build(const UpperEntry* e, int cnt) {
  Mat15 a{};
  for (int i = 0; i < cnt; ++i) {
    a[e[i].r][e[i].c] = e[i].v;
    a[e[i].c][e[i].r] = e[i].v;
  }
  return a;
}

}  // namespace

const Mat15& principal_matrix(int axis) {
  static const Mat15 a1 = build(kA1, 6);
  static const Mat15 a2 = build(kA2, 6);
  static const Mat15 a3 = build(kA3, 6);
  switch (axis) {
    case 0: return a1;
    case 1: return a2;
    default: return a3;
  }
}

Mat15 assemble_symbol(const std::array<double, 3>& xi) {
  if (xi[0] == 0.0 && xi[1] == 0.0 && xi[2] == 0.0)
    throw ConfigError("assemble_symbol: xi must be nonzero");
  Mat15 m{};
  for (int a = 0; a < 3; ++a) {
    if (xi[a] == 0.0) continue;
    const Mat15& p = principal_matrix(a);
    for (int r = 0; r < kSymbolDim; ++r)
      for (int c = 0; c < kSymbolDim; ++c) m[r][c] += xi[a] * p[r][c];
  }
  return m;
}

std::array<double, kSymbolDim> characteristic_speeds(
    const std::array<double, 3>& xi) {
  const Mat15 m = assemble_symbol(xi);
  Eigen::Matrix<double, kSymbolDim, kSymbolDim> b;
  for (int r = 0; r < kSymbolDim; ++r) {
    const double wr = 1.0 / std::sqrt(kSymmetrizerDiag[r]);
    for (int c = 0; c < kSymbolDim; ++c) {
      const double wc = 1.0 / std::sqrt(kSymmetrizerDiag[c]);
      b(r, c) = wr * m[r][c] * wc;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, kSymbolDim, kSymbolDim>>
      es(b, Eigen::EigenvaluesOnly);
  std::array<double, kSymbolDim> out;
  for (int i = 0; i < kSymbolDim; ++i) out[i] = es.eigenvalues()[i];
  return out;
}

double max_characteristic_speed() {
  static const double cached = [] {
    double m = 0.0;
    auto scan = [&](const std::array<double, 3>& xi) {
      for (double s : characteristic_speeds(xi)) m = std::max(m, std::fabs(s));
    };
    scan({1, 0, 0});
    scan({0, 1, 0});
    scan({0, 0, 1});
    // fixed linear-congruential samples, normalized
    unsigned long long x = 88172645463325252ull;
    auto urand = [&] {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      return double(x % 2000001) / 1000000.0 - 1.0;
    };
    for (int k = 0; k < 32; ++k) {
      std::array<double, 3> xi{urand(), urand(), urand()};
      const double nrm =
          std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
      if (nrm < 1e-3) continue;
      for (double& v : xi) v /= nrm;
      scan(xi);
    }
    return m;
  }();
  return cached;
}

const GoodBadSplit& classify_good_bad() {
  static const GoodBadSplit split = [] {
    GoodBadSplit s;
    auto unit = [](int i) {
      Vec15 v{};
      v[i] = 1.0;
      return v;
    };
    auto combo = [](int i, int j, double sj) {
      Vec15 v{};
      v[i] = 1.0;
      v[j] = sj;
      return v;
    };
    s.good = {{"K11", unit(0)},        {"K12", unit(1)},
              {"K22", unit(2)},        {"K13", unit(3)},
              {"K23", unit(4)},        {"G113", unit(6)},
              {"G223", unit(7)},       {"G123+G213", combo(8, 9, 1.0)},
              {"G112", unit(13)},      {"G212", unit(14)}};
    s.bad = {{"K33", unit(5)},
             {"G313", unit(10)},
             {"G323", unit(11)},
             {"G312", unit(12)},
             {"G123-G213", combo(8, 9, -1.0)}};
    return s;
  }();
  return split;
}

double symbol_vs_rhs_jacobian_max_err(const std::array<double, 3>& xi) {
  const Mat15 m = assemble_symbol(xi);
  const double step = 1e-5;
  const double k0[6] = {0, 0, 0, 0, 0, 0};
  const double g0[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0};

  // J[r][c] = d(rhs_r)/d(e_xi u_c): perturb the frame-derivative inputs of
  // each leg by xi_a * step in slot c and difference the pointwise RHS.
  double maxerr = 0.0;
  for (int c = 0; c < kSymbolDim; ++c) {
    double plus[15], minus[15];
    for (int sgn = 0; sgn < 2; ++sgn) {
      double ek[3][6] = {}, eg[3][9] = {};
      const double amp = (sgn == 0 ? step : -step);
      const int slot = kSymbolSlot[c];
      for (int a = 0; a < 3; ++a) {
        if (slot < 6)
          ek[a][slot] = xi[a] * amp;
        else
          eg[a][slot - 6] = xi[a] * amp;
      }
      double dk[6], dg[9];
      rhs_point_kg(k0, g0, ek, eg, dk, dg);
      double* out = (sgn == 0 ? plus : minus);
      for (int r = 0; r < kSymbolDim; ++r) {
        const int rs = kSymbolSlot[r];
        out[r] = rs < 6 ? dk[rs] : dg[rs - 6];
      }
    }
    for (int r = 0; r < kSymbolDim; ++r) {
      const double jrc = (plus[r] - minus[r]) / (2.0 * step);
      const double err = std::fabs(kSymmetrizerDiag[r] * jrc - m[r][c]);
      if (err > maxerr) maxerr = err;
    }
  }
  return maxerr;
}

NormalRecovery normal_recovery(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  EvolveOptions opts;
  opts.fd_order = fd_order;
  Evolver ev(s.grid(), opts);
  std::vector<double> full(std::size_t(NCOMP) * n), none(full.size());
  ev.eval_rhs(s, full.data());
  ev.eval_rhs_no_e3(s, none.data());

  // delta of the row for symbol slot r, weighted by the symmetrizer
  auto delta = [&](int r, std::size_t q) {
    const int slot = kSymbolSlot[r];
    const int comp = slot < 6 ? CK + slot : CG + (slot - 6);
    const std::size_t at = std::size_t(comp) * n + q;
    return kSymmetrizerDiag[r] * (full[at] - none[at]);
  };

  NormalRecovery out;
  out.labels = {"G223", "G123+G213", "G113", "G212", "G112",
                "K22",  "K11",       "K12",  "K23",  "K13"};
  out.reconstructed.assign(10, std::vector<double>(n));
  out.direct.assign(10, std::vector<double>(n));
  for (std::size_t q = 0; q < n; ++q) {
    out.reconstructed[0][q] = delta(0, q);                     // e3 G223
    out.reconstructed[1][q] = -delta(1, q);                    // e3 (G123+G213)
    out.reconstructed[2][q] = delta(2, q);                     // e3 G113
    out.reconstructed[3][q] = delta(3, q);                     // e3 G212
    out.reconstructed[4][q] = -delta(4, q);                    // e3 G112
    out.reconstructed[5][q] = delta(6, q);                     // e3 K22
    out.reconstructed[6][q] = delta(7, q);                     // e3 K11
    out.reconstructed[7][q] = -0.5 * (delta(8, q) + delta(9, q));  // e3 K12
    out.reconstructed[8][q] = -delta(13, q);                   // e3 K23
    out.reconstructed[9][q] = delta(14, q);                    // e3 K13
  }

  const int dcomp[10] = {CG + 5, -1,     CG + 1, CG + 3, CG + 0,
                         CK + 3, CK + 0, CK + 1, CK + 4, CK + 2};
  std::vector<double> sumfield(n);
  for (int m = 0; m < 10; ++m) {
    if (dcomp[m] >= 0) {
      frame_derivative(s, s.comp(dcomp[m]), 2, fd_order, out.direct[m].data());
    } else {
      const double* a = s.comp(CG + 2);  // G123
      const double* b = s.comp(CG + 4);  // G213
      for (std::size_t q = 0; q < n; ++q) sumfield[q] = a[q] + b[q];
      frame_derivative(s, sumfield.data(), 2, fd_order, out.direct[m].data());
    }
  }

  out.max_mismatch = 0.0;
  for (int m = 0; m < 10; ++m)
    for (std::size_t q = 0; q < n; ++q)
      out.max_mismatch = std::max(
          out.max_mismatch,
          std::fabs(out.reconstructed[m][q] - out.direct[m][q]));

  const int badrows[4] = {5, 10, 11, 12};
  for (int m = 0; m < 4; ++m) {
    double mx = 0.0;
    for (std::size_t q = 0; q < n; ++q)
      mx = std::max(mx, std::fabs(delta(badrows[m], q)));
    out.bad_row_max[m] = mx;
  }
  double mx = 0.0;
  for (std::size_t q = 0; q < n; ++q)
    mx = std::max(mx, std::fabs(delta(8, q) - delta(9, q)));
  out.bad_row_max[4] = mx;
  return out;
}

}  // namespace gadm
