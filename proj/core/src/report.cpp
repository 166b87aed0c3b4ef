#include "gadm/report.hpp"

#include <cmath>
#include <cstdio>

#include "gadm/boundary.hpp"
#include "gadm/geometry.hpp"
#include "gadm/norms.hpp"
#include "gadm/parallel.hpp"

namespace gadm {

namespace {

double weighted_l2sq(const std::vector<double>& w, const double* field,
                     std::size_t n) {
  return parallel_sum(n,
                      [&](std::size_t q) { return field[q] * field[q] * w[q]; });
}

double max_abs(const double* field, std::size_t n) {
  return parallel_max(n, [&](std::size_t q) { return std::abs(field[q]); });
}

void append(std::string& s, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, ",%.17g", v);
  s += buf;
}

}  // namespace

ResidualReport compute_residuals(const StateField& s, int fd_order) {
  const std::size_t n = s.npts();
  const std::vector<double> w = volume_weights(s);
  ResidualReport r;
  r.t = s.time();

  {
    const std::vector<double> ham = hamiltonian_residual(s, fd_order);
    r.ham_l2 = std::sqrt(weighted_l2sq(w, ham.data(), n));
    r.ham_max = max_abs(ham.data(), n);
  }
  {
    const std::vector<double> mom = momentum_residual(s, fd_order);
    double sq = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double* mj = mom.data() + std::size_t(j) * n;
      const double s2 = weighted_l2sq(w, mj, n);
      r.mom_l2[j] = std::sqrt(s2);
      r.mom_max[j] = max_abs(mj, n);
      sq += s2;
      if (r.mom_max[j] > r.ricci_b0_max) r.ricci_b0_max = r.mom_max[j];
    }
    r.ricci_b0_l2 = std::sqrt(sq);
  }
  {
    const std::vector<double> c = torsion(s, fd_order);
    double sq = 0.0;
    double mx = 0.0;
    for (int sl = 0; sl < 9; ++sl) {
      const double* cs = c.data() + std::size_t(sl) * n;
      sq += 2.0 * weighted_l2sq(w, cs, n);  // C_ijb = -C_jib
      const double m = max_abs(cs, n);
      if (m > mx) mx = m;
    }
    r.torsion_l2 = std::sqrt(sq);
    r.torsion_max = mx;
  }
  r.fdrift_max = validate(s).max_inverse_violation;
  r.energy = energy(s);
  r.hs1 = hs_norm(s, 1, fd_order);
  r.bs1 = bs_norm(s, 1, fd_order);

  r.has_boundary = s.grid().has_boundary();
  if (r.has_boundary) {
    r.corner_max = corner_residuals(s, fd_order).max_abs;
    r.ricci30_face_max = wall_ricci_30_max(s, fd_order);
  }
  return r;
}

std::string csv_header(bool boundary) {
  std::string h =
      "t,ham_l2,ham_max,mom1_l2,mom1_max,mom2_l2,mom2_max,mom3_l2,mom3_max,"
      "torsion_l2,torsion_max,riccib0_l2,riccib0_max,fdrift_max,energy,hs1,bs1";
  if (boundary)
    h += ",corner_gamma_max,corner_k22_max,corner_k11_max,corner_k12_max,"
         "ricci30_face_max";
  h += '\n';
  return h;
}

std::string csv_row(const ResidualReport& r) {
  std::string s;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", r.t);
  s += buf;
  append(s, r.ham_l2);
  append(s, r.ham_max);
  for (int j = 0; j < 3; ++j) {
    append(s, r.mom_l2[j]);
    append(s, r.mom_max[j]);
  }
  append(s, r.torsion_l2);
  append(s, r.torsion_max);
  append(s, r.ricci_b0_l2);
  append(s, r.ricci_b0_max);
  append(s, r.fdrift_max);
  append(s, r.energy);
  append(s, r.hs1);
  append(s, r.bs1);
  if (r.has_boundary) {
    for (int sl = 0; sl < 4; ++sl) append(s, r.corner_max[sl]);
    append(s, r.ricci30_face_max);
  }
  s += '\n';
  return s;
}

std::string summary_line(const ResidualReport& r) {
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "t=%-10.6g ham=%9.3e mom=%9.3e torsion=%9.3e fdrift=%9.3e "
                "energy=%.9g",
                r.t, r.ham_max,
                std::max({r.mom_max[0], r.mom_max[1], r.mom_max[2]}),
                r.torsion_max, r.fdrift_max, r.energy);
  std::string s(buf);
  if (r.has_boundary) {
    std::snprintf(buf, sizeof buf, " corner=%9.3e r30=%9.3e",
                  std::max({r.corner_max[0], r.corner_max[1], r.corner_max[2],
                            r.corner_max[3]}),
                  r.ricci30_face_max);
    s += buf;
  }
  return s;
}

}  // namespace gadm
