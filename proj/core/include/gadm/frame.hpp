#ifndef GADM_FRAME_HPP_
#define GADM_FRAME_HPP_

#include <array>
#include <vector>

#include "gadm/state.hpp"
#include "gadm/stencil.hpp"

namespace gadm {

// out = e_i u = f_i^j (d_j u) for one spatial frame leg i in {0,1,2}.
// u and out hold npts values; out must not alias u.
void frame_derivative(const StateField& s, const double* u, int i,
                      int fd_order, double* out);

// All three frame derivatives of one scalar with the coordinate partials
// computed once. out[i] must be distinct non-aliasing buffers.
void frame_derivatives_all(const StateField& s, const double* u, int fd_order,
                           const std::array<double*, 3>& out);

// Connection coefficients of the frame by the Koszul formula,
//   G_ijb = 1/2 [ f^b_l (e_i f_j^l - e_j f_i^l)
//               - f^i_l (e_j f_b^l - e_b f_j^l)
//               + f^j_l (e_b f_i^l - e_i f_b^l) ],
// which is exactly antisymmetric in (j,b); only the 9 independent slots are
// produced, in the state's G component order (9 fields of npts values).
std::vector<double> connection_from_frame(const StateField& s, int fd_order);

}  // namespace gadm

#endif
