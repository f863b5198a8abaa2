// Serial reference vs OpenMP kernels on the hot paths: lattice enumeration,
// triangulated volume, and subset-sum polarization.
#include <benchmark/benchmark.h>

#include "kaz/kazarnovskii.hpp"
#include "kaz/mixed.hpp"

using namespace kaz;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

// Dilated cross-polytope: many lattice points, many facets.
RationalPolytope cross(std::size_t dim, std::int64_t r) {
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::int64_t s : {-r, r}) {
      LatticePoint p(dim);
      p[i] = s;
      pts.push_back(p);
    }
  return convex_hull(pts);
}

std::vector<RationalPolytope> random_bodies(std::size_t dim, std::size_t count) {
  std::vector<RationalPolytope> out;
  for (std::size_t b = 0; b < count; ++b) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i <= dim + 2; ++i) {
      LatticePoint p(dim);
      for (std::size_t j = 0; j < dim; ++j) p[j] = static_cast<std::int64_t>((7 * b + 5 * i + 3 * j * j + i * j) % 5);
      pts.push_back(p);
    }
    out.push_back(convex_hull(pts));
  }
  return out;
}

void BM_LatticePoints(benchmark::State& state) {
  auto p = cross(4, 12);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p, mode(state)));
}

void BM_Volume(benchmark::State& state) {
  auto p = minkowski_sum(cross(4, 3), random_bodies(4, 1)[0]);
  for (auto _ : state) benchmark::DoNotOptimize(volume(p, mode(state)));
}

void BM_MixedVolume(benchmark::State& state) {
  auto bodies = random_bodies(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(bodies, mode(state)));
}

void BM_GlCrosscheck(benchmark::State& state) {
  auto g2 = RootSystemData::make({{FactorType::gl, 2}});
  std::vector<WeightSet> sets{make_weight_set(g2, {{0, 0}, {1, 0}}), make_weight_set(g2, {{2, 1}, {1, -1}}),
                              make_weight_set(g2, {{1, 1}, {3, 0}}), make_weight_set(g2, {{0, 0}, {2, 2}, {1, 0}})};
  for (auto _ : state) benchmark::DoNotOptimize(kaz_gl_crosscheck(sets, mode(state)));
}

}  // namespace

// Argument 0 is the serial reference, 1 the OpenMP path.
BENCHMARK(BM_LatticePoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Volume)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixedVolume)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlCrosscheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
