#include "gammahyper/hyperasym.hpp"
#include "gammahyper/late_coeffs.hpp"
#include "gammahyper/series_bounds.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace gammahyper;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_StokesProfile(benchmark::State& state) {
  const Precision p(128);
  auto grid = stokes_grid(1, 21, p.working());
  Real r(10L, p.working());
  for (auto _ : state) benchmark::DoNotOptimize(stokes_profile(SeriesKind::gamma, r, grid, 3, p, exec_of(state)));
  label(state);
}

void BM_ReproduceTable(benchmark::State& state) {
  const Precision p(512);
  (void)stirling_exact(103);
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_table(TableId::table1, p, exec_of(state)));
  label(state);
}

void BM_RemainderSweep(benchmark::State& state) {
  const Precision p(256);
  std::vector<SectorPoint> pts;
  for (int i = 0; i < 64; ++i)
    pts.push_back(SectorPoint::polar(Real(2.0 + 0.7 * i, p.working()), Real(-1.2 + 0.0375 * i, p.working())));
  for (auto _ : state) {
    auto out = sweep_map(
        pts.size(), [&](std::size_t i) { return remainder_report(pts[i], 12, SeriesKind::gamma, p); },
        exec_of(state));
    benchmark::DoNotOptimize(out);
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_StokesProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReproduceTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RemainderSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
