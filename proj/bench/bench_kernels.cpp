// Side-by-side timing of the serial reference kernels and their OpenMP
// counterparts on a realistic workload: the assembled fundamental matrix
// of a six-dimensional system and its coefficient matrix.
//
//   cmake --build build --target bench_kernels && ./build/bench/bench_kernels

#include <benchmark/benchmark.h>

#include "kz/builder.hpp"
#include "kz/kernels.hpp"

using namespace kz;

namespace {

struct Workload {
    KZSystem sys;
    MatrixF w;
    MatrixF a;
    MatrixP cleared; // numerator matrix over the common denominator
};

const Workload& workload() {
    static const Workload load = [] {
        std::vector<Rational> pts;
        for (long i = 0; i < 5; ++i) pts.emplace_back(Rational(2 * i + 1, 3));
        KZSystem sys(6, pts, -1);
        MatrixF w = to_matrix(build_fundamental(sys));
        MatrixF a = a_matrix(sys);
        Polynomial den(Rational(1));
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j) den = lcm(den, w(i, j).den());
        MatrixP cleared(w.rows(), w.cols());
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j)
                cleared(i, j) = w(i, j).num() * den.exact_div(w(i, j).den());
        return Workload{std::move(sys), std::move(w), std::move(a), std::move(cleared)};
    }();
    return load;
}

void bm_mul_serial(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(serial::mul(load.a, load.w));
}

void bm_mul_omp(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(par::mul(load.a, load.w));
}

void bm_residual_serial(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(serial::ode_residual(load.w, load.a, -1));
}

void bm_residual_omp(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(par::ode_residual(load.w, load.a, -1));
}

void bm_det_serial(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(serial::det(load.cleared));
}

void bm_det_omp(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(par::det(load.cleared));
}

void bm_cofactors_serial(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(serial::cofactor_matrix(load.cleared));
}

void bm_cofactors_omp(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(par::cofactor_matrix(load.cleared));
}

void bm_build_serial(benchmark::State& state) {
    const Workload& load = workload();
    set_parallel_enabled(false);
    for (auto _ : state) benchmark::DoNotOptimize(build_fundamental(load.sys));
    set_parallel_enabled(true);
}

void bm_build_omp(benchmark::State& state) {
    const Workload& load = workload();
    for (auto _ : state) benchmark::DoNotOptimize(build_fundamental(load.sys));
}

BENCHMARK(bm_mul_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_mul_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_residual_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_residual_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_det_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_det_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_cofactors_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_cofactors_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_build_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_build_omp)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
