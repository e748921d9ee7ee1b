// Serial reference kernels against their OpenMP counterparts on the n = 7 workloads
// the validity sweeps and membership oracle spend their time in.

#include <benchmark/benchmark.h>

#include <vector>

#include "qapf/families.hpp"
#include "qapf/kernels.hpp"
#include "qapf/reductions.hpp"

using namespace qapf;

namespace {

const VertexTable& table7()
{
    static const VertexTable t(7);
    return t;
}

const std::vector<LinearForm>& qap3_forms()
{
    static const auto forms = collect_family(7, Family::Qap3);
    return forms;
}

// The K7-plus-isolated point at t = 7 is a member, so every form is evaluated.
const DenseYPoint& member_point()
{
    static const DenseYPoint y = densify(build_point_qap4(Graph::complete_graph(7).with_isolated_vertices(8), 7));
    return y;
}

const std::vector<LinearForm>& qap4_forms8()
{
    static const auto forms = collect_family(8, Family::Qap4);
    return forms;
}

template <KernelMode Mode>
void lhs_sweep(benchmark::State& state)
{
    const auto& forms = qap3_forms();
    std::vector<std::int64_t> out(table7().size());
    std::size_t f = 0;
    for (auto _ : state) {
        lhs_over_vertices(Mode, forms[f++ % forms.size()], table7(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(table7().size()));
}

template <KernelMode Mode>
void closed_slack(benchmark::State& state)
{
    const auto& forms = qap3_forms();
    std::vector<std::int64_t> out(table7().size());
    std::size_t f = 0;
    for (auto _ : state) {
        closed_slack_over_vertices(Mode, *forms[f++ % forms.size()].params(), table7(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(table7().size()));
}

void first_violation_serial(benchmark::State& state)
{
    const auto& forms = qap4_forms8();
    for (auto _ : state) benchmark::DoNotOptimize(serial::first_violation(forms, member_point()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(forms.size()));
}

void first_violation_parallel(benchmark::State& state)
{
    static const FormBatch batch = [] {
        FormBatch b(8);
        for (const auto& f : qap4_forms8()) b.add(f);
        return b;
    }();
    for (auto _ : state) benchmark::DoNotOptimize(parallel::first_violation(batch, member_point()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.size()));
}

}  // namespace

BENCHMARK(lhs_sweep<KernelMode::Serial>)->Name("lhs_over_vertices/serial");
BENCHMARK(lhs_sweep<KernelMode::Parallel>)->Name("lhs_over_vertices/parallel");
BENCHMARK(closed_slack<KernelMode::Serial>)->Name("closed_slack/serial");
BENCHMARK(closed_slack<KernelMode::Parallel>)->Name("closed_slack/parallel");
BENCHMARK(first_violation_serial)->Name("first_violation/serial");
BENCHMARK(first_violation_parallel)->Name("first_violation/parallel");

BENCHMARK_MAIN();
