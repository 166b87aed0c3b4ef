#include "gadm/grid.hpp"

namespace gadm {

std::vector<std::string> Grid::validate(int fd_order) const {
  std::vector<std::string> errs;
  if (fd_order != 2 && fd_order != 4)
    errs.push_back("fd order must be 2 or 4, got " + std::to_string(fd_order));
  const int halfwidth = (fd_order == 2) ? 1 : 2;
  const int nmin = 2 * halfwidth + 1;
  for (int a = 0; a < 3; ++a) {
    if (n[a] < nmin)
      errs.push_back("grid: axis " + std::to_string(a + 1) + " has n=" +
                     std::to_string(n[a]) + ", need at least " +
                     std::to_string(nmin) + " for order-" +
                     std::to_string(fd_order) + " stencils");
    if (!(h[a] > 0.0))
      errs.push_back("grid: axis " + std::to_string(a + 1) +
                     " spacing must be positive");
  }
  if (topo[0] == Topology::boundary || topo[1] == Topology::boundary)
    errs.push_back("grid: boundary topology is only supported on axis 3");
  return errs;
}

Grid Grid::refined() const {
  Grid g = *this;
  for (int a = 0; a < 3; ++a) {
    if (topo[a] == Topology::periodic) {
      g.n[a] = 2 * n[a];
    } else {
      g.n[a] = 2 * n[a] - 1;
    }
    g.h[a] = 0.5 * h[a];
  }
  return g;
}

}  // namespace gadm
