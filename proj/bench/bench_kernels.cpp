// Serial reference loops against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <vector>

#include "shiftlab/kernels.hpp"
#include "shiftlab/rng.hpp"

namespace k = shiftlab::kernels;
using k::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::uint64_t seed)
{
    shiftlab::Rng rng(seed);
    std::vector<cplx> v(n);
    for (auto& x : v)
        x = rng.complex_normal();
    return v;
}

template <auto Fn>
void toeplitz(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto sym = random_vec(2 * 32 + 1, 1);
    const auto x = random_vec(n, 2);
    std::vector<cplx> y(n);
    for (auto _ : state) {
        Fn(sym, x, y);
        benchmark::DoNotOptimize(y.data());
    }
}

template <auto Fn>
void horner(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto c = random_vec(64, 3);
    const auto pts = random_vec(n, 4);
    std::vector<cplx> out(n);
    for (auto _ : state) {
        Fn(c, pts, out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <auto Fn>
void modulus_fill(benchmark::State& state)
{
    const auto b = random_vec(9, 5);
    Eigen::MatrixXcd out(state.range(0), state.range(0));
    for (auto _ : state) {
        Fn(b, out);
        benchmark::DoNotOptimize(out.data());
    }
}

}  // namespace

BENCHMARK(toeplitz<k::serial::toeplitz_apply>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(toeplitz<k::parallel::toeplitz_apply>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(horner<k::serial::horner_eval>)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(horner<k::parallel::horner_eval>)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(modulus_fill<k::serial::bergman_modulus_fill>)->RangeMultiplier(2)->Range(128, 1024);
BENCHMARK(modulus_fill<k::parallel::bergman_modulus_fill>)->RangeMultiplier(2)->Range(128, 1024);

BENCHMARK_MAIN();
