// Microbenchmarks for the hot paths: stencil sweeps, the pointwise RHS,
// full RK4 steps, and the residual monitor.

#include <benchmark/benchmark.h>

#include <gadm/evolution.hpp>
#include <gadm/report.hpp>
#include <gadm/scenarios.hpp>
#include <gadm/stencil.hpp>

#include <array>
#include <vector>

namespace {

gadm::Grid cube(int n) {
  gadm::Grid g;
  g.n = {n, n, n};
  g.h = {1.0 / n, 1.0 / n, 1.0 / n};
  return g;
}

const std::array<double, 3> kP{2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0};

void bm_stencil(benchmark::State& st) {
  const gadm::Grid g = cube(int(st.range(0)));
  const gadm::StateField s = gadm::random_periodic_frame(g, 3, 0.05, 4);
  std::vector<double> out(g.npts());
  for (auto _ : st) {
    gadm::partial_derivative(g, s.f(0, 0), 0, 4, out.data());
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * g.npts());
}
BENCHMARK(bm_stencil)->Arg(32)->Arg(64);

void bm_rhs(benchmark::State& st) {
  const gadm::Grid g = cube(int(st.range(0)));
  const gadm::StateField s = gadm::kasner(g, kP, 1.0);
  gadm::Evolver ev(g, {});
  std::vector<double> rhs(std::size_t(gadm::NCOMP) * g.npts());
  for (auto _ : st) {
    ev.eval_rhs(s, rhs.data());
    benchmark::DoNotOptimize(rhs.data());
  }
  st.SetItemsProcessed(st.iterations() * g.npts());
}
BENCHMARK(bm_rhs)->Arg(24)->Arg(48);

void bm_step(benchmark::State& st) {
  const gadm::Grid g = cube(int(st.range(0)));
  gadm::StateField s = gadm::kasner(g, kP, 1.0);
  gadm::Evolver ev(g, {});
  const double dt = gadm::cfl_dt(g, 0.25);
  for (auto _ : st) {
    ev.step_rk4(s, dt);
    benchmark::DoNotOptimize(s.data());
  }
  st.SetItemsProcessed(st.iterations() * g.npts());
}
BENCHMARK(bm_step)->Arg(24)->Arg(48);

void bm_residuals(benchmark::State& st) {
  const gadm::Grid g = cube(int(st.range(0)));
  const gadm::StateField s = gadm::random_periodic_frame(g, 5, 0.05, 4);
  for (auto _ : st) {
    const gadm::ResidualReport r = gadm::compute_residuals(s, 4);
    benchmark::DoNotOptimize(r.ham_max);
  }
  st.SetItemsProcessed(st.iterations() * g.npts());
}
BENCHMARK(bm_residuals)->Arg(24)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
