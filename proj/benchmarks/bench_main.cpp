#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "fif/eval.hpp"
#include "fif/model.hpp"
#include "fif/shape.hpp"

namespace {

fif::HermiteData make_data(int n) {
    const auto nn = std::size_t(n);
    std::vector<double> x(nn), y(nn), d(nn);
    for (std::size_t j = 0; j < nn; ++j) {
        x[j] = double(j) / (n - 1);
        y[j] = std::sin(x[j]);
        d[j] = std::cos(x[j]);
    }
    return fif::HermiteData(x, y, d);
}

void bench_build(benchmark::State& state) {
    const auto data = make_data(int(state.range(0)));
    const auto params =
        fif::select_parameters(data, fif::ShapeClass::MonotoneIncreasing, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(fif::build_fif(data, params));
}
BENCHMARK(bench_build)->Arg(16)->Arg(256);

void bench_eval(benchmark::State& state) {
    const auto data = make_data(33);
    const auto fif = fif::build_fif(
        data, fif::select_parameters(data, fif::ShapeClass::MonotoneIncreasing, 0.5));
    double x = data.x_front();
    const double step = data.span() / 1024.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fif::eval_at(fif, x));
        x += step;
        if (x > data.x_back())
            x = data.x_front();
    }
}
BENCHMARK(bench_eval);

void bench_sample(benchmark::State& state) {
    const auto data = make_data(9);
    const auto fif = fif::build_fif(
        data, fif::select_parameters(data, fif::ShapeClass::MonotoneIncreasing, 0.5));
    for (auto _ : state)
        benchmark::DoNotOptimize(fif::sample_attractor(fif, int(state.range(0))));
}
BENCHMARK(bench_sample)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
