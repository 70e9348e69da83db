// Serial reference vs OpenMP wedge kernels on endomorphism-valued forms.

#include "algch/catalog.hpp"
#include "algch/random.hpp"
#include "algch/transgression.hpp"

#include <benchmark/benchmark.h>

using namespace algch;

namespace {

Form<Matrix> random_end_form(ExactRandom& rng, std::size_t frame, std::size_t degree, std::size_t dim)
{
    Form<Matrix> f(frame, degree, Matrix(dim, dim));
    for (std::size_t i = 0; i < f.size(); ++i)
        f.value_at(i) = rng.complex_matrix(dim, dim);
    return f;
}

void wedge_kernel(benchmark::State& state, Exec exec)
{
    const auto frame = static_cast<std::size_t>(state.range(0));
    ExactRandom rng(1);
    const auto a = random_end_form(rng, frame, 2, 3), b = random_end_form(rng, frame, 2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(wedge_end(a, b, exec));
}

void cs_kernel(benchmark::State& state, Exec exec)
{
    ExactRandom rng(2);
    const auto g = direct_product(catalog::so3(), catalog::heisenberg());
    const GradedBundle d(2, 2);
    std::vector<Connection> list;
    for (int m = 0; m < 2; ++m) {
        std::vector<Matrix> om;
        for (std::size_t i = 0; i < g.rank(); ++i)
            om.push_back(direct_sum(rng.complex_matrix(2, 2), rng.complex_matrix(2, 2)));
        list.emplace_back(g, d, std::move(om));
    }
    const auto q = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cs_cochain(list, q, exec));
}

void BM_WedgeSerial(benchmark::State& s) { wedge_kernel(s, Exec::serial); }
void BM_WedgeParallel(benchmark::State& s) { wedge_kernel(s, Exec::parallel); }
void BM_CsSerial(benchmark::State& s) { cs_kernel(s, Exec::serial); }
void BM_CsParallel(benchmark::State& s) { cs_kernel(s, Exec::parallel); }

} // namespace

BENCHMARK(BM_WedgeSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WedgeParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CsSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CsParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
