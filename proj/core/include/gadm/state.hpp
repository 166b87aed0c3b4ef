#ifndef GADM_STATE_HPP_
#define GADM_STATE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "gadm/grid.hpp"
#include "gadm/indexing.hpp"

namespace gadm {

// Full evolved state: 33 scalar fields over a grid plus the slice time.
// Component c occupies data()[c*npts .. (c+1)*npts); see indexing.hpp for
// the component order, which is also the snapshot order.
class StateField {
 public:
  StateField() = default;
  explicit StateField(const Grid& g, double t = 0.0)
      : grid_(g), t_(t), data_(std::size_t(NCOMP) * g.npts(), 0.0) {}

  const Grid& grid() const { return grid_; }
  double time() const { return t_; }
  void set_time(double t) { t_ = t; }
  std::size_t npts() const { return grid_.npts(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  double* comp(int c) { return data_.data() + std::size_t(c) * npts(); }
  const double* comp(int c) const { return data_.data() + std::size_t(c) * npts(); }

  double* f(int i, int j) { return comp(CF + 3 * i + j); }
  const double* f(int i, int j) const { return comp(CF + 3 * i + j); }
  double* finv(int b, int j) { return comp(CFI + 3 * b + j); }
  const double* finv(int b, int j) const { return comp(CFI + 3 * b + j); }
  double* k(int i, int j) { return comp(CK + sym6(i, j)); }
  const double* k(int i, int j) const { return comp(CK + sym6(i, j)); }
  // Stored slot (j<b); use gamma_full for arbitrary index order.
  double* gam(int i, int p) { return comp(CG + 3 * i + p); }
  const double* gam(int i, int p) const { return comp(CG + 3 * i + p); }

  // Gathers the point values into dense per-point arrays.
  void point_f(std::size_t q, double out[3][3]) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i][j] = f(i, j)[q];
  }
  void point_finv(std::size_t q, double out[3][3]) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i][j] = finv(i, j)[q];
  }
  void point_k6(std::size_t q, double out[6]) const {
    for (int s = 0; s < 6; ++s) out[s] = comp(CK + s)[q];
  }
  void point_g9(std::size_t q, double out[9]) const {
    for (int s = 0; s < 9; ++s) out[s] = comp(CG + s)[q];
  }

 private:
  Grid grid_;
  double t_ = 0.0;
  std::vector<double> data_;
};

struct ValidationReport {
  // max over points and index pairs of |f_i^j f^b_j - delta_i^b|
  double max_inverse_violation = 0.0;
  std::size_t worst_point = 0;
  // min over points of |det f|
  double min_abs_det_f = 0.0;
  std::size_t min_det_point = 0;
  // first non-finite entry, if any (component, linear point index)
  std::optional<std::pair<int, std::size_t>> nonfinite;
};

// Consistency monitor; reports, never throws.
ValidationReport validate(const StateField& s);

// det of the frame coefficient matrix f_i^j at one point.
double det_f(const StateField& s, std::size_t q);

}  // namespace gadm

#endif
