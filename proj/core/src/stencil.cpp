#include "gadm/stencil.hpp"

#include <cstddef>

#include "gadm/errors.hpp"
#include "gadm/parallel.hpp"

namespace gadm {

namespace {

struct LineSet {
  std::size_t nlines;
  std::size_t stride;
  // start offset of line L
  std::size_t n0, n1, n2;
  int axis;
  std::size_t start(std::size_t L) const {
    switch (axis) {
      case 0: {  // lines vary i0; one line per (i1,i2)
        std::size_t i1 = L / n2, i2 = L % n2;
        return i1 * n2 + i2;
      }
      case 1: {  // one line per (i0,i2)
        std::size_t i0 = L / n2, i2 = L % n2;
        return i0 * n1 * n2 + i2;
      }
      default: {  // one line per (i0,i1)
        return L * n2;
      }
    }
  }
};

LineSet lines_for(const Grid& g, int axis) {
  LineSet ls;
  ls.n0 = g.n[0];
  ls.n1 = g.n[1];
  ls.n2 = g.n[2];
  ls.axis = axis;
  switch (axis) {
    case 0:
      ls.nlines = ls.n1 * ls.n2;
      ls.stride = ls.n1 * ls.n2;
      break;
    case 1:
      ls.nlines = ls.n0 * ls.n2;
      ls.stride = ls.n2;
      break;
    default:
      ls.nlines = ls.n0 * ls.n1;
      ls.stride = 1;
      break;
  }
  return ls;
}

// difference-of-neighbors grouping: constants cancel exactly
void d1_periodic_o4(const double* u, double* out, std::size_t len,
                    std::size_t st, double ih12) {
  auto U = [&](std::size_t k) { return u[k * st]; };
  // wrap zones
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t km2 = (k + len - 2) % len, km1 = (k + len - 1) % len;
    out[k * st] = (8.0 * (U(k + 1) - U(km1)) - (U(k + 2) - U(km2))) * ih12;
  }
  for (std::size_t k = 2; k + 2 < len; ++k)
    out[k * st] =
        (8.0 * (U(k + 1) - U(k - 1)) - (U(k + 2) - U(k - 2))) * ih12;
  for (std::size_t k = len - 2; k < len; ++k) {
    std::size_t kp1 = (k + 1) % len, kp2 = (k + 2) % len;
    out[k * st] = (8.0 * (U(kp1) - U(k - 1)) - (U(kp2) - U(k - 2))) * ih12;
  }
}

void d1_bounded_o4(const double* u, double* out, std::size_t len,
                   std::size_t st, double ih12) {
  auto U = [&](std::size_t k) { return u[k * st]; };
  out[0] = (-25.0 * U(0) + 48.0 * U(1) - 36.0 * U(2) + 16.0 * U(3) - 3.0 * U(4)) * ih12;
  out[st] = (-3.0 * U(0) - 10.0 * U(1) + 18.0 * U(2) - 6.0 * U(3) + U(4)) * ih12;
  for (std::size_t k = 2; k + 2 < len; ++k)
    out[k * st] =
        (8.0 * (U(k + 1) - U(k - 1)) - (U(k + 2) - U(k - 2))) * ih12;
  const std::size_t l = len - 1;
  out[(l - 1) * st] =
      (-U(l - 4) + 6.0 * U(l - 3) - 18.0 * U(l - 2) + 10.0 * U(l - 1) + 3.0 * U(l)) * ih12;
  out[l * st] =
      (3.0 * U(l - 4) - 16.0 * U(l - 3) + 36.0 * U(l - 2) - 48.0 * U(l - 1) + 25.0 * U(l)) * ih12;
}

void d1_periodic_o2(const double* u, double* out, std::size_t len,
                    std::size_t st, double ih2) {
  auto U = [&](std::size_t k) { return u[k * st]; };
  out[0] = (U(1) - U(len - 1)) * ih2;
  for (std::size_t k = 1; k + 1 < len; ++k)
    out[k * st] = (U(k + 1) - U(k - 1)) * ih2;
  out[(len - 1) * st] = (U(0) - U(len - 2)) * ih2;
}

void d1_bounded_o2(const double* u, double* out, std::size_t len,
                   std::size_t st, double ih2) {
  auto U = [&](std::size_t k) { return u[k * st]; };
  out[0] = (-3.0 * U(0) + 4.0 * U(1) - U(2)) * ih2;
  for (std::size_t k = 1; k + 1 < len; ++k)
    out[k * st] = (U(k + 1) - U(k - 1)) * ih2;
  const std::size_t l = len - 1;
  out[l * st] = (U(l - 2) - 4.0 * U(l - 1) + 3.0 * U(l)) * ih2;
}

}  // namespace

void partial_derivative(const Grid& grid, const double* u, int axis,
                        int fd_order, double* out) {
  const LineSet ls = lines_for(grid, axis);
  const std::size_t len = grid.n[axis];
  const bool periodic = grid.topo[axis] == Topology::periodic;
  const double h = grid.h[axis];

  parallel_for(ls.nlines, [&](std::size_t b, std::size_t e) {
    for (std::size_t L = b; L < e; ++L) {
      const double* ul = u + ls.start(L);
      double* ol = out + ls.start(L);
      if (fd_order == 4) {
        const double ih12 = 1.0 / (12.0 * h);
        if (periodic)
          d1_periodic_o4(ul, ol, len, ls.stride, ih12);
        else
          d1_bounded_o4(ul, ol, len, ls.stride, ih12);
      } else {
        const double ih2 = 1.0 / (2.0 * h);
        if (periodic)
          d1_periodic_o2(ul, ol, len, ls.stride, ih2);
        else
          d1_bounded_o2(ul, ol, len, ls.stride, ih2);
      }
    }
  });
}

void add_dissipation(const Grid& grid, const double* u, double sigma,
                     double* inout) {
  if (sigma == 0.0) return;
  static const double kW[7] = {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0};
  for (int axis = 0; axis < 3; ++axis) {
    const LineSet ls = lines_for(grid, axis);
    const std::size_t len = grid.n[axis];
    const bool periodic = grid.topo[axis] == Topology::periodic;
    if (!periodic && len < 7) continue;
    const double c = sigma / (64.0 * grid.h[axis]);
    parallel_for(ls.nlines, [&](std::size_t b, std::size_t e) {
      for (std::size_t L = b; L < e; ++L) {
        const double* ul = u + ls.start(L);
        double* ol = inout + ls.start(L);
        auto U = [&](std::size_t k) { return ul[k * ls.stride]; };
        if (periodic) {
          for (std::size_t k = 0; k < len; ++k) {
            double acc = 0.0;
            for (int m = -3; m <= 3; ++m)
              acc += kW[m + 3] * U((k + len + m) % len);
            ol[k * ls.stride] += c * acc;
          }
        } else {
          for (std::size_t k = 3; k + 3 < len; ++k) {
            double acc = 0.0;
            for (int m = -3; m <= 3; ++m) acc += kW[m + 3] * U(k + m);
            ol[k * ls.stride] += c * acc;
          }
        }
      }
    });
  }
}

}  // namespace gadm
