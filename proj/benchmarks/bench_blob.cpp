#include <benchmark/benchmark.h>

#include <blob/alcove.hpp>
#include <blob/oracle.hpp>
#include <blob/params.hpp>
#include <blob/repdims.hpp>
#include <blob/tableaux.hpp>

namespace {

void BM_DegreeNodes(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto p = blob::validate_params(5, 2, n);
  auto t = blob::t_lambda(-n + 2 * (n / 3), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(blob::degree_g(t, p));
  }
}
BENCHMARK(BM_DegreeNodes)->Arg(16)->Arg(64)->Arg(256);

void BM_DegreeWalls(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto p = blob::validate_params(5, 2, n);
  auto t = blob::t_lambda(-n + 2 * (n / 3), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(blob::degree_walk(t, p).degree);
  }
}
BENCHMARK(BM_DegreeWalls)->Arg(16)->Arg(64)->Arg(256);

void BM_EnumerateClass(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto p = blob::validate_params(5, 2, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(blob::enumerate_residue_class(-n, p).members.size());
  }
}
BENCHMARK(BM_EnumerateClass)->Arg(10)->Arg(14)->Arg(18);

void BM_CellDimsClosed(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto p = blob::validate_params(5, 2, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(blob::cell_dims_subalgebra(-n, p).cell.size());
  }
}
BENCHMARK(BM_CellDimsClosed)->Arg(64)->Arg(256)->Arg(1024);

void BM_DecompositionMatrix(benchmark::State& state) {
  auto p = blob::validate_params(5, 2, 16);
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(blob::decomposition_matrix(p, threads).columns.size());
  }
}
BENCHMARK(BM_DecompositionMatrix)->Arg(1)->Arg(4);

void BM_VerifyConsistency(benchmark::State& state) {
  auto p = blob::validate_params(5, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(blob::verify_consistency(p, 1).all_passed());
  }
}
BENCHMARK(BM_VerifyConsistency)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
