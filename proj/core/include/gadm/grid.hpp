#ifndef GADM_GRID_HPP_
#define GADM_GRID_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gadm {

enum class Topology { periodic, boundary };

// Uniform structured grid. Storage is structure-of-arrays with the last
// axis fastest: linear index ((i0*n1)+i1)*n2+i2.
//
// Periodic axis: points x_k = origin + k h, k = 0..n-1, period n*h.
// Boundary axis: points x_k = origin + k h, k = 0..n-1, faces at k=0, n-1.
// A boundary topology is only supported on the last axis.
struct Grid {
  std::array<int, 3> n{8, 8, 8};
  std::array<double, 3> h{0.125, 0.125, 0.125};
  std::array<double, 3> origin{0.0, 0.0, 0.0};
  std::array<Topology, 3> topo{Topology::periodic, Topology::periodic,
                               Topology::periodic};

  std::size_t npts() const {
    return std::size_t(n[0]) * std::size_t(n[1]) * std::size_t(n[2]);
  }
  std::size_t idx(int i0, int i1, int i2) const {
    return (std::size_t(i0) * n[1] + i1) * n[2] + i2;
  }
  void unravel(std::size_t lin, int& i0, int& i1, int& i2) const {
    i2 = int(lin % n[2]);
    lin /= n[2];
    i1 = int(lin % n[1]);
    i0 = int(lin / n[1]);
  }
  double x(int axis, int k) const { return origin[axis] + h[axis] * k; }
  // Axis extent: period for periodic axes, face-to-face length otherwise.
  double extent(int axis) const {
    return topo[axis] == Topology::periodic ? h[axis] * n[axis]
                                            : h[axis] * (n[axis] - 1);
  }
  bool has_boundary() const { return topo[2] == Topology::boundary; }

  // Contract checks: n_a >= 2*halfwidth+1 for the requested stencil order,
  // positive spacings, boundary only on the last axis. Returns all problems.
  std::vector<std::string> validate(int fd_order) const;

  // Same grid refined by 2: periodic n -> 2n (h halves, period fixed);
  // boundary axis n -> 2n-1 (h halves, length fixed).
  Grid refined() const;
};

}  // namespace gadm

#endif
