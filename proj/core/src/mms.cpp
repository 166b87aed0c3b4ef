#include "gadm/mms.hpp"

#include <cmath>
#include <cstring>

#include "gadm/errors.hpp"
#include "gadm/evolution.hpp"
#include "gadm/parallel.hpp"

namespace gadm {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

class Recipe {
 public:
  virtual ~Recipe() = default;
  virtual void eval(double t, const double x[3], double u[NCOMP],
                    double dtu[NCOMP], double dxu[3][NCOMP]) const = 0;
};

class KasnerExact final : public Recipe {
 public:
  void eval(double t, const double x[3], double u[NCOMP], double dtu[NCOMP],
            double dxu[3][NCOMP]) const override {
    (void)x;
    if (!(t > 0.0)) throw ConfigError("kasner-exact requires t > 0");
    static constexpr double p[3] = {2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0};
    for (int c = 0; c < NCOMP; ++c) {
      u[c] = dtu[c] = 0.0;
      for (int a = 0; a < 3; ++a) dxu[a][c] = 0.0;
    }
    for (int i = 0; i < 3; ++i) {
      const double fv = std::pow(t, -p[i]);
      const double fiv = std::pow(t, p[i]);
      u[CF + 4 * i] = fv;
      dtu[CF + 4 * i] = -p[i] * fv / t;
      u[CFI + 4 * i] = fiv;
      dtu[CFI + 4 * i] = p[i] * fiv / t;
      u[CK + sym6(i, i)] = p[i] / t;
      dtu[CK + sym6(i, i)] = -p[i] / (t * t);
    }
  }
};

// One travelling wave per component: amp * w(2 pi m.x + om t + ph), w = sin
// or cos. Diagonal f entries carry a unit base and finv is the reciprocal.
struct Wave {
  double amp, om, ph;
  int m[3];
  bool cosine;

  double arg(double t, const double x[3]) const {
    return kTwoPi * (m[0] * x[0] + m[1] * x[1] + m[2] * x[2]) + om * t + ph;
  }
  double val(double t, const double x[3]) const {
    const double a = arg(t, x);
    return amp * (cosine ? std::cos(a) : std::sin(a));
  }
  double dval(double t, const double x[3]) const {  // d/d(arg)
    const double a = arg(t, x);
    return amp * (cosine ? -std::sin(a) : std::cos(a));
  }
};

class Trig01 final : public Recipe {
 public:
  void eval(double t, const double x[3], double u[NCOMP], double dtu[NCOMP],
            double dxu[3][NCOMP]) const override {
    for (int c = 0; c < NCOMP; ++c) {
      u[c] = dtu[c] = 0.0;
      for (int a = 0; a < 3; ++a) dxu[a][c] = 0.0;
    }
    static constexpr Wave fw[3] = {
        {0.10, 0.50, 0.3, {1, 0, 1}, false},
        {0.08, -0.40, 1.1, {0, 1, 1}, false},
        {0.12, 0.30, 2.0, {1, 1, 0}, false},
    };
    for (int i = 0; i < 3; ++i) {
      const double v = 1.0 + fw[i].val(t, x);
      const double d = fw[i].dval(t, x);
      const int cf = CF + 4 * i;
      const int cfi = CFI + 4 * i;
      u[cf] = v;
      dtu[cf] = fw[i].om * d;
      u[cfi] = 1.0 / v;
      dtu[cfi] = -fw[i].om * d / (v * v);
      for (int a = 0; a < 3; ++a) {
        const double dx = kTwoPi * fw[i].m[a] * d;
        dxu[a][cf] = dx;
        dxu[a][cfi] = -dx / (v * v);
      }
    }
    static constexpr Wave kw[6] = {
        {0.050, -0.40, 0.7, {1, 0, 1}, false},   // K11
        {0.040, 0.30, 0.1, {0, 1, -1}, true},    // K12
        {0.030, 0.60, 1.3, {1, -1, 0}, false},   // K13
        {0.045, 0.20, 0.5, {1, 1, 0}, false},    // K22
        {0.035, -0.50, 2.1, {1, 0, 1}, true},    // K23
        {0.055, 0.45, 0.9, {-1, 0, 1}, false},   // K33
    };
    static constexpr Wave gw[9] = {
        {0.030, 0.35, 0.2, {1, 0, 0}, false},    // G1 (12)
        {0.025, -0.25, 1.0, {0, 1, 1}, true},    // G1 (13)
        {0.020, 0.55, 0.4, {0, 0, 1}, false},    // G1 (23)
        {0.028, 0.15, 1.7, {1, 1, 0}, true},     // G2 (12)
        {0.024, -0.35, 0.8, {0, 1, 0}, false},   // G2 (13)
        {0.032, 0.45, 0.3, {1, 0, -1}, true},    // G2 (23)
        {0.026, 0.65, 1.5, {-1, 1, 0}, false},   // G3 (12)
        {0.022, -0.15, 0.6, {0, 1, 1}, true},    // G3 (13)
        {0.034, 0.25, 1.9, {1, 1, 1}, false},    // G3 (23)
    };
    for (int s = 0; s < 6; ++s) put(kw[s], CK + s, t, x, u, dtu, dxu);
    for (int s = 0; s < 9; ++s) put(gw[s], CG + s, t, x, u, dtu, dxu);
  }

 private:
  static void put(const Wave& w, int c, double t, const double x[3],
                  double u[NCOMP], double dtu[NCOMP], double dxu[3][NCOMP]) {
    const double d = w.dval(t, x);
    u[c] = w.val(t, x);
    dtu[c] = w.om * d;
    for (int a = 0; a < 3; ++a) dxu[a][c] = kTwoPi * w.m[a] * d;
  }
};

const Recipe& find_recipe(const std::string& name) {
  static const KasnerExact kasner;
  static const Trig01 trig;
  if (name == "kasner-exact") return kasner;
  if (name == "trig01") return trig;
  throw ConfigError("unknown mms recipe '" + name + "'");
}

}  // namespace

std::vector<std::string> mms_recipes() { return {"kasner-exact", "trig01"}; }

bool has_mms_recipe(const std::string& name) {
  return name == "kasner-exact" || name == "trig01";
}

void mms_eval(const std::string& recipe, double t, const double x[3],
              double u[NCOMP], double dtu[NCOMP], double dxu[3][NCOMP]) {
  find_recipe(recipe).eval(t, x, u, dtu, dxu);
}

StateField mms_state(const std::string& recipe, const Grid& g, double t) {
  const Recipe& r = find_recipe(recipe);
  {  // surface bad arguments before the parallel sweep
    double u[NCOMP], dtu[NCOMP], dxu[3][NCOMP];
    const double x0[3] = {g.x(0, 0), g.x(1, 0), g.x(2, 0)};
    r.eval(t, x0, u, dtu, dxu);
  }
  StateField s(g, t);
  double* base = s.data();
  const std::size_t n = g.npts();
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    double u[NCOMP], dtu[NCOMP], dxu[3][NCOMP];
    for (std::size_t q = b; q < e; ++q) {
      int iv[3];
      g.unravel(q, iv[0], iv[1], iv[2]);
      const double x[3] = {g.x(0, iv[0]), g.x(1, iv[1]), g.x(2, iv[2])};
      r.eval(t, x, u, dtu, dxu);
      for (int c = 0; c < NCOMP; ++c) base[std::size_t(c) * n + q] = u[c];
    }
  });
  return s;
}

void mms_source(const std::string& recipe, const Grid& g, double t,
                double* out) {
  const Recipe& r = find_recipe(recipe);
  const std::size_t n = g.npts();
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    double u[NCOMP], dtu[NCOMP], dxu[3][NCOMP];
    for (std::size_t q = b; q < e; ++q) {
      int iv[3];
      g.unravel(q, iv[0], iv[1], iv[2]);
      const double x[3] = {g.x(0, iv[0]), g.x(1, iv[1]), g.x(2, iv[2])};
      r.eval(t, x, u, dtu, dxu);

      double fm[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) fm[i][j] = u[CF + 3 * i + j];

      // exact frame derivatives of K and G
      double ek[3][6], eg[3][9];
      for (int a = 0; a < 3; ++a) {
        for (int s = 0; s < 6; ++s) {
          double v = 0.0;
          for (int j = 0; j < 3; ++j) v += fm[a][j] * dxu[j][CK + s];
          ek[a][s] = v;
        }
        for (int s = 0; s < 9; ++s) {
          double v = 0.0;
          for (int j = 0; j < 3; ++j) v += fm[a][j] * dxu[j][CG + s];
          eg[a][s] = v;
        }
      }

      double dk6[6], dg9[9], df9[9], dfi9[9];
      rhs_point_kg(u + CK, u + CG, ek, eg, dk6, dg9);
      rhs_point_frame(u + CK, u + CF, u + CFI, df9, dfi9);

      double rhs[NCOMP];
      for (int s = 0; s < 9; ++s) rhs[CF + s] = df9[s];
      for (int s = 0; s < 9; ++s) rhs[CFI + s] = dfi9[s];
      for (int s = 0; s < 6; ++s) rhs[CK + s] = dk6[s];
      for (int s = 0; s < 9; ++s) rhs[CG + s] = dg9[s];
      for (int c = 0; c < NCOMP; ++c)
        out[std::size_t(c) * n + q] = dtu[c] - rhs[c];
    }
  });
}

MmsError mms_error(const StateField& s, const std::string& recipe) {
  const StateField ex = mms_state(recipe, s.grid(), s.time());
  const std::size_t n = s.npts();
  MmsError err;
  struct Group {
    int c0, nc;
    double MmsError::*slot;
  };
  static constexpr Group groups[4] = {{CF, 9, &MmsError::f},
                                      {CFI, 9, &MmsError::finv},
                                      {CK, 6, &MmsError::k},
                                      {CG, 9, &MmsError::g}};
  for (const Group& grp : groups) {
    const double* a = s.data() + std::size_t(grp.c0) * n;
    const double* b = ex.data() + std::size_t(grp.c0) * n;
    const std::size_t cnt = std::size_t(grp.nc) * n;
    const double m = parallel_max(
        cnt, [&](std::size_t q) { return std::abs(a[q] - b[q]); });
    err.*(grp.slot) = m;
    if (m > err.all) err.all = m;
  }
  return err;
}

}  // namespace gadm
