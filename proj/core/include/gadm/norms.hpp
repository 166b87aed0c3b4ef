#ifndef GADM_NORMS_HPP_
#define GADM_NORMS_HPP_

#include <vector>

#include "gadm/state.hpp"

namespace gadm {

// Quadrature weights, one per grid point: sqrt(det h) h1 h2 h3 with the
// metric determinant read back from the inverse frame coefficients
// (sqrt(det h) = |det f^b_j|), periodic axes uniform, the boundary axis
// carrying fourth-order summation-by-parts end weights
// (17/48, 59/48, 43/48, 49/48) when it has at least 8 points and trapezoid
// weights otherwise.
std::vector<double> volume_weights(const StateField& s);

// Volume-weighted L2 norm of one scalar field (npts values) over s's grid.
double l2_norm(const StateField& s, const double* field);

// Sobolev norm over spatial frame derivatives: the root of the sum of
// squared L2 norms of every ordered word e_{i1}..e_{ik} u, k <= sord, over
// the listed state components. sord must be in [0, 2].
double hs_norm(const StateField& s, const std::vector<int>& comps, int sord,
               int fd_order);
double hs_norm(const StateField& s, int sord, int fd_order);  // all 33

// Boundary-adapted norm: words W e_3^m e_0^q u with tangential legs
// W in {e_1, e_2}* outermost and weight |W| + q + 2m <= sord, sord in
// [0, 4]. Time derivatives are produced by substituting the evolution
// right-hand side, never from stored time levels: u' = F(u), and higher
// orders by directional differencing of F along the lower-order towers
// (the right-hand side is quadratic, so the centered differences are exact
// up to roundoff).
double bs_norm(const StateField& s, const std::vector<int>& comps, int sord,
               int fd_order);
double bs_norm(const StateField& s, int sord, int fd_order);  // all 33

// d^q/dt^q of the full state along the flow, q = 1..qmax (qmax <= 4),
// each entry one NCOMP*npts buffer in state layout.
std::vector<std::vector<double>> time_derivatives(const StateField& s,
                                                  int qmax, int fd_order);

// 1/2 ||K||^2 + 1/4 ||G||^2, volume-weighted.
double energy(const StateField& s);

}  // namespace gadm

#endif
