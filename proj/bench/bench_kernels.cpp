#include "qsym/harness.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <string>
#include <vector>

using namespace qsym;

namespace {

const std::vector<std::vector<std::string>> kSelections = {
    {"QBID*", "QPFID*", "ID*", "QID*", "QBINREC"},  // q-binomial and Pochhammer identities
    {"RF-*", "ORTH*", "INTERTWINE"},                 // q3j
    {"Q6J-ORACLE", "QS*"},                           // q6j
};

void run(benchmark::State& state, Execution execution) {
  SuiteOptions o;
  o.selection = kSelections[static_cast<size_t>(state.range(0))];
  o.trials = 8;
  o.execution = execution;
  for (auto _ : state) {
    auto reports = run_suite(o);
    benchmark::DoNotOptimize(reports.data());
    if (!all_pass(reports)) state.SkipWithError("identity failed");
  }
  state.counters["threads"] = execution == Execution::Serial ? 1 : omp_get_max_threads();
}

void BM_SuiteSerial(benchmark::State& state) { run(state, Execution::Serial); }
void BM_SuiteParallel(benchmark::State& state) { run(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_SuiteSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
