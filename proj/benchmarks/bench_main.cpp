#include <benchmark/benchmark.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "wrd/lifting.hpp"

using namespace wrd;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(WRD_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NumberlinkInstance square(int side, int pairs) {
  std::mt19937 rng(static_cast<unsigned>(side * 100 + pairs));
  std::vector<CellCoord> cells;
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) cells.push_back({x, y});
  std::shuffle(cells.begin(), cells.end(), rng);
  NumberlinkInstance g{side, side, {}};
  for (int i = 0; i < pairs; ++i) {
    g.terminals.push_back({i + 1, {cells[static_cast<std::size_t>(2 * i)], cells[static_cast<std::size_t>(2 * i + 1)]}});
  }
  return g;
}

void BM_BuildNumberBlock(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_number_block(k, 4 * k + 3));
}
BENCHMARK(BM_BuildNumberBlock)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

// 6x6 board; the pair count drives k and so the block side.
void BM_Reduce6x6(benchmark::State& state) {
  const NumberlinkInstance g = square(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g));
  state.counters["k"] = choose_k(g.pair_count());
}
BENCHMARK(BM_Reduce6x6)->Arg(1)->Arg(5)->Arg(10)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_ReduceSide(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const NumberlinkInstance g = square(side, std::min(3, side * side / 2));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g));
  state.SetComplexityN(side * side);
}
BENCHMARK(BM_ReduceSide)->RangeMultiplier(2)->Range(2, 32)->Complexity()->Unit(benchmark::kMillisecond);

void BM_LiftFig3(benchmark::State& state) {
  const NumberlinkInstance g = parse_numberlink_instance(read("fig3.json"));
  const NumberlinkSolution s = parse_numberlink_solution(read("fig3_solution.json"));
  const Reduction r = reduce(g);
  for (auto _ : state) benchmark::DoNotOptimize(lift(g, s, r.map));
}
BENCHMARK(BM_LiftFig3)->Unit(benchmark::kMillisecond);

void BM_VerifyLiftedFig3(benchmark::State& state) {
  const NumberlinkInstance g = parse_numberlink_instance(read("fig3.json"));
  const NumberlinkSolution s = parse_numberlink_solution(read("fig3_solution.json"));
  const Reduction r = reduce(g);
  const WataridoriSolution h = lift(g, s, r.map);
  for (auto _ : state) benchmark::DoNotOptimize(verify_solution(r.puzzle, h));
}
BENCHMARK(BM_VerifyLiftedFig3)->Unit(benchmark::kMillisecond);

void BM_UnliftFig3(benchmark::State& state) {
  const NumberlinkInstance g = parse_numberlink_instance(read("fig3.json"));
  const NumberlinkSolution s = parse_numberlink_solution(read("fig3_solution.json"));
  const Reduction r = reduce(g);
  const WataridoriSolution h = lift(g, s, r.map);
  for (auto _ : state) benchmark::DoNotOptimize(unlift(h, r.map));
}
BENCHMARK(BM_UnliftFig3)->Unit(benchmark::kMillisecond);

void BM_SolveFig1(benchmark::State& state) {
  const WataridoriInstance h = parse_wataridori_instance(read("fig1.json"));
  for (auto _ : state) benchmark::DoNotOptimize(solve(h));
}
BENCHMARK(BM_SolveFig1);

void BM_SolveFig3(benchmark::State& state) {
  const NumberlinkInstance g = parse_numberlink_instance(read("fig3.json"));
  for (auto _ : state) benchmark::DoNotOptimize(solve(g));
}
BENCHMARK(BM_SolveFig3);

}  // namespace

BENCHMARK_MAIN();
