#ifndef GADM_STENCIL_HPP_
#define GADM_STENCIL_HPP_

// Finite-difference first-derivative operators on the structured grid.
//
// Interior: centered stencils of order 2 or 4.
//   order 4: ( u[k-2] - 8 u[k-1] + 8 u[k+1] - u[k+2] ) / (12 h)
// Boundary closures on a non-periodic axis keep the interior order using
// one-sided / biased width-(order+1) rows:
//   order 4, node 0:  (-25 u0 + 48 u1 - 36 u2 + 16 u3 - 3 u4) / (12 h)
//   order 4, node 1:  ( -3 u0 - 10 u1 + 18 u2 -  6 u3 +   u4) / (12 h)
//   (mirrored with flipped signs at the far face)
//   order 2, node 0:  (-3 u0 + 4 u1 - u2) / (2 h)
// All rows are exact on polynomials of degree <= order.

#include <cstddef>
#include <vector>

#include "gadm/grid.hpp"

namespace gadm {

// out = coordinate partial derivative of the scalar field u along `axis`.
// u and out hold grid.npts() values; out must not alias u.
void partial_derivative(const Grid& grid, const double* u, int axis,
                        int fd_order, double* out);

// Adds sigma-weighted high-order dissipation along every axis to `inout`:
//   du += (sigma / 64 h) * [1 -6 15 -20 15 -6 1] * u   (per axis)
// which damps at the grid scale and converges away at 5th order. On a
// boundary axis rows within 3 points of a face are left untouched.
void add_dissipation(const Grid& grid, const double* u, double sigma,
                     double* inout);

}  // namespace gadm

#endif
