#include <benchmark/benchmark.h>

#include <vector>

#include "nobeling/nobeling.hpp"

using namespace nobeling;

static void BM_ConstantC(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(constant_C(terms));
}
BENCHMARK(BM_ConstantC)->Arg(8)->Arg(64)->Arg(256);

static void BM_NthLine(benchmark::State& state) {
  unsigned long i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nth_line(4, LineIndex(i++)));
}
BENCHMARK(BM_NthLine);

static void BM_IndexOfLine(benchmark::State& state) {
  FixtureRng rng(1);
  std::vector<AxisLine> lines;
  for (int k = 0; k < 1024; ++k) {
    lines.emplace_back(static_cast<std::size_t>(rng.uniform(0, 3)),
                       std::vector<Scalar>{rng.rational(8), rng.rational(8), rng.rational(8)});
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(index_of_line(lines[k++ % lines.size()]));
}
BENCHMARK(BM_IndexOfLine);

static void BM_PushAwayRoundTrip(benchmark::State& state) {
  const AxisLine line(0, {Scalar(0), Scalar(0), Scalar(0)});
  const MoveMap move = push_away(line, Scalar(1, 2));
  FixtureRng rng(2);
  std::vector<Point> pts;
  while (pts.size() < 1024) {
    Point p = rng.point(4, 64);
    if (!line.contains(p)) pts.push_back(std::move(p));
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(move.inverse(move.forward(pts[k++ % pts.size()])));
}
BENCHMARK(BM_PushAwayRoundTrip);

static void BM_Straighten(benchmark::State& state) {
  const AxisLine line(1, {Scalar(0), Scalar(0), Scalar(0)});
  FixtureRng rng(3);
  std::vector<Point> samples;
  for (int k = 0; k < state.range(0); ++k) {
    samples.push_back(k % 2 == 0 ? rng.point_on(line, 8) : rng.point(4, 8));
  }
  for (auto _ : state) benchmark::DoNotOptimize(straighten(samples, line, Scalar(1, 2), Scalar(1, 32)));
}
BENCHMARK(BM_Straighten)->Arg(4)->Arg(20);

static void BM_GameRun(benchmark::State& state) {
  RunConfig cfg;
  cfg.dim = 4;
  cfg.rounds = static_cast<int>(state.range(0));
  cfg.samples = game_fixture(4, 8, 42);
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg));
}
BENCHMARK(BM_GameRun)->Arg(3)->Arg(8);

static void BM_ComplementConnected(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const VoxelSet v = line_fixture(4, r, 0);
  const Window all{Cell(4, 0), Cell(4, r)};
  for (auto _ : state) benchmark::DoNotOptimize(complement_connected(v, all));
}
BENCHMARK(BM_ComplementConnected)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
