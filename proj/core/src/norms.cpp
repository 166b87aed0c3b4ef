#include "gadm/norms.hpp"

#include <cmath>
#include <cstring>

#include "gadm/errors.hpp"
#include "gadm/evolution.hpp"
#include "gadm/frame.hpp"
#include "gadm/parallel.hpp"

namespace gadm {

namespace {

double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double l2sq(const StateField& s, const std::vector<double>& w,
            const double* field) {
  return parallel_sum(s.npts(),
                      [&](std::size_t q) { return field[q] * field[q] * w[q]; });
}

// Tower of flow derivatives by directional differencing of the rhs.
// F is quadratic in the state, so every centered stencil below is exact up
// to roundoff; epsilon only balances roundoff amplification.
class FlowTower {
 public:
  FlowTower(const StateField& s, int fd_order)
      : s_(s),
        ev_(s.grid(), make_opts(fd_order)),
        len_(std::size_t(NCOMP) * s.npts()),
        work_(s.grid(), s.time()),
        f0_(len_) {
    uscale_ = 1.0;
    const double* base = s.data();
    const double m =
        parallel_max(len_, [&](std::size_t q) { return std::abs(base[q]); });
    if (m > uscale_) uscale_ = m;
    ev_.eval_rhs(s, f0_.data());
  }

  // derivs[q] = d^{q+1} u / dt^{q+1}, q = 0..qmax-1
  std::vector<std::vector<double>> build(int qmax) {
    std::vector<std::vector<double>> d;
    d.push_back(f0_);
    if (qmax >= 2) d.push_back(jvp(d[0]));
    if (qmax >= 3) {
      std::vector<double> u3 = hvp(d[0], d[0]);
      axpy(u3, 1.0, jvp(d[1]));
      d.push_back(std::move(u3));
    }
    if (qmax >= 4) {
      std::vector<double> u4 = third(d[0]);
      axpy(u4, 3.0, hvp(d[0], d[1]));
      axpy(u4, 1.0, jvp(d[2]));
      d.push_back(std::move(u4));
    }
    return d;
  }

 private:
  static EvolveOptions make_opts(int fd_order) {
    EvolveOptions o;
    o.fd_order = fd_order;
    return o;
  }

  static void axpy(std::vector<double>& y, double a,
                   const std::vector<double>& x) {
    for (std::size_t q = 0; q < y.size(); ++q) y[q] += a * x[q];
  }

  double max_abs(const std::vector<double>& v) const {
    return parallel_max(len_, [&](std::size_t q) { return std::abs(v[q]); });
  }

  // F(u + c d) into out
  void eval_shifted(const std::vector<double>& d, double c,
                    std::vector<double>& out) {
    const double* base = s_.data();
    double* w = work_.data();
    parallel_for(len_, [&](std::size_t b, std::size_t e) {
      for (std::size_t q = b; q < e; ++q) w[q] = base[q] + c * d[q];
    });
    out.resize(len_);
    ev_.eval_rhs(work_, out.data());
  }

  // F'(u)[d]
  std::vector<double> jvp(const std::vector<double>& d) {
    const double a = max_abs(d);
    std::vector<double> out(len_, 0.0);
    if (a == 0.0) return out;
    const double eps = 0.01 * uscale_ / a;
    std::vector<double> p, m;
    eval_shifted(d, eps, p);
    eval_shifted(d, -eps, m);
    const double inv = 1.0 / (2.0 * eps);
    for (std::size_t q = 0; q < len_; ++q) out[q] = (p[q] - m[q]) * inv;
    return out;
  }

  // F''(u)[a, b] by polarization of the diagonal form
  std::vector<double> hvp(const std::vector<double>& va,
                          const std::vector<double>& vb) {
    const double na = max_abs(va);
    const double nb = max_abs(vb);
    std::vector<double> out(len_, 0.0);
    if (na == 0.0 || nb == 0.0) return out;
    std::vector<double> sum(len_), dif(len_);
    for (std::size_t q = 0; q < len_; ++q) {
      const double ah = va[q] / na;
      const double bh = vb[q] / nb;
      sum[q] = ah + bh;
      dif[q] = ah - bh;
    }
    const std::vector<double> hs = hvp_diag(sum);
    const std::vector<double> hd = hvp_diag(dif);
    const double c = 0.25 * na * nb;
    for (std::size_t q = 0; q < len_; ++q) out[q] = c * (hs[q] - hd[q]);
    return out;
  }

  // F''(u)[d, d]
  std::vector<double> hvp_diag(const std::vector<double>& d) {
    const double a = max_abs(d);
    std::vector<double> out(len_, 0.0);
    if (a == 0.0) return out;
    const double eps = 0.02 * uscale_ / a;
    std::vector<double> p, m;
    eval_shifted(d, eps, p);
    eval_shifted(d, -eps, m);
    const double inv = 1.0 / (eps * eps);
    for (std::size_t q = 0; q < len_; ++q)
      out[q] = (p[q] - 2.0 * f0_[q] + m[q]) * inv;
    return out;
  }

  // F'''(u)[d, d, d]; identically zero for a quadratic rhs, kept so the
  // tower stays faithful if lower-order terms are ever added.
  std::vector<double> third(const std::vector<double>& d) {
    const double a = max_abs(d);
    std::vector<double> out(len_, 0.0);
    if (a == 0.0) return out;
    const double eps = 0.05 * uscale_ / a;
    std::vector<double> p1, m1, p2, m2;
    eval_shifted(d, eps, p1);
    eval_shifted(d, -eps, m1);
    eval_shifted(d, 2.0 * eps, p2);
    eval_shifted(d, -2.0 * eps, m2);
    const double inv = 1.0 / (2.0 * eps * eps * eps);
    for (std::size_t q = 0; q < len_; ++q)
      out[q] = (p2[q] - 2.0 * p1[q] + 2.0 * m1[q] - m2[q]) * inv;
    return out;
  }

  const StateField& s_;
  Evolver ev_;
  std::size_t len_;
  StateField work_;
  std::vector<double> f0_;
  double uscale_;
};

// Sum of squared L2 norms of all tangential words applied to base, lengths
// 0..maxlen. Buffers per recursion depth.
double tangential_word_sum(const StateField& s, const std::vector<double>& w,
                           const double* base, int maxlen, int fd_order,
                           std::vector<std::vector<double>>& scratch) {
  double acc = l2sq(s, w, base);
  if (maxlen == 0) return acc;
  if (int(scratch.size()) < maxlen)
    scratch.resize(maxlen, std::vector<double>(s.npts()));
  struct Rec {
    const StateField& s;
    const std::vector<double>& w;
    int fd;
    std::vector<std::vector<double>>& buf;
    double sum = 0.0;
    void visit(const double* fld, int rem, int depth) {
      for (int leg = 0; leg < 2; ++leg) {
        frame_derivative(s, fld, leg, fd, buf[depth].data());
        sum += l2sq(s, w, buf[depth].data());
        if (rem > 1) visit(buf[depth].data(), rem - 1, depth + 1);
      }
    }
  } rec{s, w, fd_order, scratch};
  rec.visit(base, maxlen, 0);
  return acc + rec.sum;
}

void check_comps(const std::vector<int>& comps) {
  for (int c : comps)
    if (c < 0 || c >= NCOMP)
      throw ConfigError("component index out of range: " + std::to_string(c));
}

std::vector<int> all_comps() {
  std::vector<int> c(NCOMP);
  for (int i = 0; i < NCOMP; ++i) c[i] = i;
  return c;
}

}  // namespace

std::vector<double> volume_weights(const StateField& s) {
  const Grid& g = s.grid();
  const std::size_t n = g.npts();
  const double cell = g.h[0] * g.h[1] * g.h[2];

  std::vector<double> w3(g.n[2], 1.0);
  if (g.has_boundary()) {
    const int n3 = g.n[2];
    if (n3 >= 8) {
      static constexpr double sbp[4] = {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0,
                                        49.0 / 48.0};
      for (int k = 0; k < 4; ++k) {
        w3[k] = sbp[k];
        w3[n3 - 1 - k] = sbp[k];
      }
    } else {
      w3[0] = w3[n3 - 1] = 0.5;
    }
  }

  std::vector<double> w(n);
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t q = b; q < e; ++q) {
      double fi[3][3];
      s.point_finv(q, fi);
      int i0, i1, i2;
      g.unravel(q, i0, i1, i2);
      w[q] = std::abs(det3(fi)) * cell * w3[i2];
    }
  });
  return w;
}

double l2_norm(const StateField& s, const double* field) {
  const std::vector<double> w = volume_weights(s);
  return std::sqrt(l2sq(s, w, field));
}

double hs_norm(const StateField& s, const std::vector<int>& comps, int sord,
               int fd_order) {
  if (sord < 0 || sord > 2)
    throw ConfigError("hs_norm order must be in [0, 2], got " +
                      std::to_string(sord));
  check_comps(comps);
  const std::vector<double> w = volume_weights(s);
  const std::size_t n = s.npts();
  std::vector<double> d1(n), d2(n);
  double acc = 0.0;
  for (int c : comps) {
    const double* u = s.comp(c);
    acc += l2sq(s, w, u);
    if (sord >= 1) {
      for (int i = 0; i < 3; ++i) {
        frame_derivative(s, u, i, fd_order, d1.data());
        acc += l2sq(s, w, d1.data());
        if (sord >= 2) {
          for (int j = 0; j < 3; ++j) {
            frame_derivative(s, d1.data(), j, fd_order, d2.data());
            acc += l2sq(s, w, d2.data());
          }
        }
      }
    }
  }
  return std::sqrt(acc);
}

double hs_norm(const StateField& s, int sord, int fd_order) {
  return hs_norm(s, all_comps(), sord, fd_order);
}

std::vector<std::vector<double>> time_derivatives(const StateField& s,
                                                  int qmax, int fd_order) {
  if (qmax < 1 || qmax > 4)
    throw ConfigError("time derivative order must be in [1, 4], got " +
                      std::to_string(qmax));
  FlowTower tower(s, fd_order);
  return tower.build(qmax);
}

double bs_norm(const StateField& s, const std::vector<int>& comps, int sord,
               int fd_order) {
  if (sord < 0 || sord > 4)
    throw ConfigError("bs_norm order must be in [0, 4], got " +
                      std::to_string(sord));
  check_comps(comps);
  const std::vector<double> w = volume_weights(s);
  const std::size_t n = s.npts();

  std::vector<std::vector<double>> tower;
  if (sord >= 1) tower = time_derivatives(s, sord, fd_order);

  std::vector<std::vector<double>> scratch;
  std::vector<double> e3a(n), e3b(n);
  double acc = 0.0;
  for (int c : comps) {
    for (int q = 0; q <= sord; ++q) {
      const double* base =
          q == 0 ? s.comp(c) : tower[q - 1].data() + std::size_t(c) * n;
      for (int m = 0; 2 * m + q <= sord && m <= 2; ++m) {
        const double* fld = base;
        if (m >= 1) {
          frame_derivative(s, base, 2, fd_order, e3a.data());
          fld = e3a.data();
        }
        if (m >= 2) {
          frame_derivative(s, e3a.data(), 2, fd_order, e3b.data());
          fld = e3b.data();
        }
        acc += tangential_word_sum(s, w, fld, sord - q - 2 * m, fd_order,
                                   scratch);
      }
    }
  }
  return std::sqrt(acc);
}

double bs_norm(const StateField& s, int sord, int fd_order) {
  return bs_norm(s, all_comps(), sord, fd_order);
}

double energy(const StateField& s) {
  const std::vector<double> w = volume_weights(s);
  const std::size_t n = s.npts();
  const double* base = s.data();
  return parallel_sum(n, [&](std::size_t q) {
    double k2 = 0.0;
    for (int sl = 0; sl < 6; ++sl) {
      const double v = base[std::size_t(CK + sl) * n + q];
      const double mult = kSym6I[sl] == kSym6J[sl] ? 1.0 : 2.0;
      k2 += mult * v * v;
    }
    double g2 = 0.0;
    for (int sl = 0; sl < 9; ++sl) {
      const double v = base[std::size_t(CG + sl) * n + q];
      g2 += 2.0 * v * v;
    }
    return (0.5 * k2 + 0.25 * g2) * w[q];
  });
}

}  // namespace gadm
