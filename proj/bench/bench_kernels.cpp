#include <benchmark/benchmark.h>

#include "einstab/charpoly.hpp"
#include "einstab/expected.hpp"
#include "einstab/lich.hpp"
#include "einstab/oracle.hpp"
#include "einstab/spaces.hpp"

using namespace einstab;

namespace {

exact::IntMatrix lich_integer(const std::string& spec) {
  auto M = spaces::build(spaces::parse_spec(spec));
  return exact::to_integer(lich::assemble_lich_matrix(M.summands, M.constants)).M;
}

void BM_charpoly_modular(benchmark::State& st, const char* spec) {
  auto A = lich_integer(spec);
  for (auto _ : st) benchmark::DoNotOptimize(exact::kernels::charpoly_modular(A));
}

void BM_charpoly_bareiss(benchmark::State& st, const char* spec) {
  auto A = lich_integer(spec);
  for (auto _ : st) benchmark::DoNotOptimize(exact::kernels::charpoly_bareiss(A));
}

void BM_structure_tensor(benchmark::State& st, const char* target) {
  auto M = oracle::build_model(target);
  for (auto _ : st) benchmark::DoNotOptimize(oracle::structure_tensor(M));
}

void BM_structure_tensor_serial(benchmark::State& st, const char* target) {
  auto M = oracle::build_model(target);
  for (auto _ : st) benchmark::DoNotOptimize(oracle::structure_tensor_serial(M));
}

void BM_constants(benchmark::State& st, const char* target) {
  auto M = oracle::build_model(target);
  auto t = oracle::structure_tensor(M);
  for (auto _ : st) benchmark::DoNotOptimize(oracle::structural_constants_bruteforce(M, t));
}

void BM_constants_serial(benchmark::State& st, const char* target) {
  auto M = oracle::build_model(target);
  auto t = oracle::structure_tensor(M);
  for (auto _ : st) benchmark::DoNotOptimize(oracle::structural_constants_serial(M, t));
}

void BM_table(benchmark::State& st, spaces::TableId t) {
  for (auto _ : st) benchmark::DoNotOptimize(spaces::run_table(t));
}

}  // namespace

BENCHMARK_CAPTURE(BM_charpoly_modular, flag_e6, "flag:e6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_charpoly_bareiss, flag_e6, "flag:e6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_charpoly_modular, flag_e8, "flag:e8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_structure_tensor, adjoint_su3_x2, "som:adjoint(su(3))x2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_structure_tensor_serial, adjoint_su3_x2, "som:adjoint(su(3))x2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_constants, flag_so8, "flag:so(8)")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_constants_serial, flag_so8, "flag:so(8)")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_table, IB3, spaces::TableId::IB3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
