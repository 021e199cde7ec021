#include "dcb/borrowing.hpp"
#include "dcb/erlang.hpp"
#include "dcb/propagation.hpp"
#include "dcb/simulator.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_ErlangB(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dcb::erlang_b(0.8 * n, n));
}
BENCHMARK(BM_ErlangB)->Arg(10)->Arg(100)->Arg(1000);

void BM_PathLoss(benchmark::State& state) {
    dcb::RadioEnvironment env;
    double d = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcb::path_loss_db(env, d));
        d = d < 10.0 ? d + 0.001 : 0.1;
    }
}
BENCHMARK(BM_PathLoss);

void BM_Sinr(benchmark::State& state) {
    dcb::RadioEnvironment env;
    const auto layout = dcb::ClusterLayout::build(7, 3, 1000.0);
    double r = 50.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dcb::sinr_db(env, layout, r, 1, dcb::Group::B, dcb::Management::Off));
        r = r < 1000.0 ? r + 1.0 : 50.0;
    }
}
BENCHMARK(BM_Sinr);

void BM_AdmitRelease(benchmark::State& state) {
    const auto layout = dcb::ClusterLayout::build(7, 3, 1000.0);
    dcb::LedgerBook book(layout, 100, 70);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> cell_pick(1, 7);
    std::vector<dcb::ChannelAssignment> held;
    for (auto _ : state) {
        if (!held.empty() && (rng() & 1)) {
            book.release_call(held.back());
            held.pop_back();
        } else {
            const auto r = book.admit_call(cell_pick(rng), true);
            if (r.admitted)
                held.push_back(r.assignment);
        }
    }
    for (const auto& a : held)
        book.release_call(a);
}
BENCHMARK(BM_AdmitRelease);

void BM_RunScenario(benchmark::State& state) {
    dcb::Scenario s;
    s.layout = dcb::ClusterLayout::build(7, 3, 1000.0);
    s.traffic.arrival_rates.assign(7, 20.0);
    s.traffic.mean_holding_s = 1.0;
    s.channels_per_cell = 30;
    s.threshold = 21;
    s.borrowing_enabled = true;
    s.duration_s = 2000.0;
    s.warmup_s = 100.0;
    s.seed = 5;
    for (auto _ : state)
        benchmark::DoNotOptimize(dcb::run_scenario(s));
}
BENCHMARK(BM_RunScenario)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
