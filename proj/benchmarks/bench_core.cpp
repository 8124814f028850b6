#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "pierce/covering.hpp"
#include "pierce/fit.hpp"
#include "pierce/gen.hpp"
#include "pierce/meb.hpp"
#include "pierce/oracle.hpp"
#include "pierce/outliers.hpp"
#include "pierce/rng.hpp"
#include "pierce/sampling.hpp"
#include "pierce/tester.hpp"

using namespace pierce;

namespace {

std::vector<Point> random_cloud(int n, int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point p(d);
    for (int c = 0; c < d; ++c) p[c] = rng.real(-1, 1);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

static void BM_MinEnclosingBall(benchmark::State& state) {
  const auto pts = random_cloud(static_cast<int>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(min_enclosing_ball(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinEnclosingBall)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

static void BM_FitPolytopeTranslate(benchmark::State& state) {
  std::vector<Facet> fs;
  for (double sx : {1.0, -1.0})
    for (double sy : {1.0, -1.0}) fs.push_back({Point{sx, sy}, 1.0});
  const ConvexBody dia = ConvexBody::polytope(2, fs);
  const auto pts = random_cloud(static_cast<int>(state.range(0)), 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(fits_in_translate(dia, pts));
}
BENCHMARK(BM_FitPolytopeTranslate)->Range(8, 512);

static void BM_Test1Cluster(benchmark::State& state) {
  const ConvexBody body = ConvexBody::ball(2, 1.0);
  const Instance inst =
      gen_clusterable(body, 1, state.range(0), 2, 5);
  const VectorSource src(inst.points);
  TesterParams params;
  params.epsilon = 0.2;
  std::uint64_t s = 0;
  for (auto _ : state) {
    params.seed = ++s;
    benchmark::DoNotOptimize(test_1_cluster(src, body, params));
  }
}
BENCHMARK(BM_Test1Cluster)->Range(1000, 64000);

static void BM_TestKCluster(benchmark::State& state) {
  const ConvexBody body = ConvexBody::ball(2, 1.0);
  const Instance inst = gen_clusterable(body, 2, state.range(0), 2, 9);
  const VectorSource src(inst.points);
  TesterParams params;
  params.epsilon = 0.99;
  const long long t = covering_t(body, 0.01).t;
  std::uint64_t s = 0;
  for (auto _ : state) {
    params.seed = ++s;
    benchmark::DoNotOptimize(test_k_cluster(src, body, 2, params, t));
  }
}
BENCHMARK(BM_TestKCluster)->Range(1000, 16000);

static void BM_MaxCoverage1(benchmark::State& state) {
  const ConvexBody body = ConvexBody::ball(2, 1.0);
  PointSet ps;
  ps.dim = 2;
  ps.points = random_cloud(static_cast<int>(state.range(0)), 2, 13);
  for (auto _ : state) benchmark::DoNotOptimize(max_coverage_1(body, ps));
}
BENCHMARK(BM_MaxCoverage1)->Range(20, 160);

static void BM_KCenterGonzalez(benchmark::State& state) {
  const auto pts = random_cloud(static_cast<int>(state.range(0)), 2, 17);
  for (auto _ : state) benchmark::DoNotOptimize(k_center_gonzalez(pts, 3));
}
BENCHMARK(BM_KCenterGonzalez)->Range(100, 10000);

static void BM_AnnulusCoverCenters(benchmark::State& state) {
  const ConvexBody body = ConvexBody::ball(3, 1.0);
  const CoveringEstimate est = covering_t(body, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(annulus_cover_centers(body, est));
}
BENCHMARK(BM_AnnulusCoverCenters);

BENCHMARK_MAIN();
