#ifndef GADM_REPORT_HPP_
#define GADM_REPORT_HPP_

#include <array>
#include <string>

#include "gadm/state.hpp"

namespace gadm {

// One monitoring row: constraint and consistency residuals of a slice.
// L2 norms are volume-weighted; max norms are pointwise over all slots.
struct ResidualReport {
  double t = 0.0;
  double ham_l2 = 0.0, ham_max = 0.0;
  std::array<double, 3> mom_l2{}, mom_max{};
  double torsion_l2 = 0.0, torsion_max = 0.0;
  double ricci_b0_l2 = 0.0, ricci_b0_max = 0.0;
  double fdrift_max = 0.0;  // max |f_i^j f^b_j - delta|
  double energy = 0.0;      // 1/2|K|^2 + 1/4|G|^2 integrated
  double hs1 = 0.0;         // H^1 of the full state
  double bs1 = 0.0;         // B^1 of the full state
  bool has_boundary = false;
  std::array<double, 4> corner_max{};  // G pair, K22, K11, K12
  double ricci30_face_max = 0.0;
};

ResidualReport compute_residuals(const StateField& s, int fd_order);

// CSV with one column per field above, %.17g, so equal states give equal
// rows byte for byte. Boundary columns appear only for boundary grids.
std::string csv_header(bool boundary);
std::string csv_row(const ResidualReport& r);

// Fixed-width human-readable one-liner for logs.
std::string summary_line(const ResidualReport& r);

}  // namespace gadm

#endif
