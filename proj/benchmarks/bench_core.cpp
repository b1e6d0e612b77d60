#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "descat/catenoid.hpp"
#include "descat/diffgeo.hpp"
#include "descat/mesh.hpp"
#include "descat/projection.hpp"
#include "descat/singular.hpp"

using namespace descat;

static void BM_ComponentsI(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double theta = 0.0;
  for (auto _ : state) {
    theta += 1e-3;
    benchmark::DoNotOptimize(components_I(m, 1.3, theta));
  }
}
BENCHMARK(BM_ComponentsI)->Arg(2)->Arg(6);

static void BM_ComponentsII(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double theta = 0.0;
  for (auto _ : state) {
    theta += 1e-3;
    benchmark::DoNotOptimize(components_II(m, 1.3, theta));
  }
}
BENCHMARK(BM_ComponentsII)->Arg(2)->Arg(6);

static void BM_Frame(benchmark::State& state) {
  const SurfaceSpec spec{Family::TypeI, 3};
  double theta = 0.0;
  for (auto _ : state) {
    theta += 1e-3;
    benchmark::DoNotOptimize(frame(spec, std::polar(1.3, theta)));
  }
}
BENCHMARK(BM_Frame);

static void BM_FundamentalForms(benchmark::State& state) {
  const SurfaceSpec spec{Family::TypeII, 3};
  const SurfaceFn fn = [spec](double u, double v) {
    return surface_point(spec, u, v);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fundamental_forms(fn, Signature::DeSitter, 1.3, 0.1).H);
  }
}
BENCHMARK(BM_FundamentalForms);

static void BM_HollowballProject(benchmark::State& state) {
  const Point4 p = components_II(3, 1.3, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hollowball_project(p));
  }
}
BENCHMARK(BM_HollowballProject);

static void BM_ExtensionResidual(benchmark::State& state) {
  const SurfaceSpec spec{Family::TypeII, 3};
  const Point4 p = components_II(3, 1.3, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension_residual(spec, p));
  }
}
BENCHMARK(BM_ExtensionResidual);

static void BM_SampleAndMesh(benchmark::State& state) {
  RunConfig cfg;
  cfg.spec = {Family::TypeII, 2};
  cfg.n_r = static_cast<int>(state.range(0));
  cfg.n_theta = 2 * cfg.n_r;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_and_mesh(cfg).points.size());
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_r * cfg.n_theta);
}
BENCHMARK(BM_SampleAndMesh)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
