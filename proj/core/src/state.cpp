#include "gadm/state.hpp"

#include <cmath>
#include <limits>

namespace gadm {

double det_f(const StateField& s, std::size_t q) {
  double m[3][3];
  s.point_f(q, m);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ValidationReport validate(const StateField& s) {
  ValidationReport r;
  const std::size_t n = s.npts();
  if (n == 0) return r;

  // Non-finite scan over the whole buffer, first hit wins.
  const double* d = s.data();
  const std::size_t tot = s.size();
  for (std::size_t i = 0; i < tot; ++i) {
    if (!std::isfinite(d[i])) {
      r.nonfinite = std::make_pair(int(i / n), i % n);
      break;
    }
  }

  // Serial scans with argmax tracking; cheap relative to evolution.
  double worst = -1.0, mindet = std::numeric_limits<double>::infinity();
  std::size_t worstq = 0, mindetq = 0;
  for (std::size_t q = 0; q < n; ++q) {
    double f[3][3], fi[3][3];
    s.point_f(q, f);
    s.point_finv(q, fi);
    for (int i = 0; i < 3; ++i) {
      for (int b = 0; b < 3; ++b) {
        double prod = f[i][0] * fi[b][0] + f[i][1] * fi[b][1] + f[i][2] * fi[b][2];
        double v = std::abs(prod - (i == b ? 1.0 : 0.0));
        if (v > worst) {
          worst = v;
          worstq = q;
        }
      }
    }
    double det = std::abs(det_f(s, q));
    if (det < mindet) {
      mindet = det;
      mindetq = q;
    }
  }
  r.max_inverse_violation = worst;
  r.worst_point = worstq;
  r.min_abs_det_f = mindet;
  r.min_det_point = mindetq;
  return r;
}

}  // namespace gadm
