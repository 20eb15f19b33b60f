// Serial vs OpenMP comparison for the sweep kernels.

#include "lgl/action.hpp"
#include "lgl/filtration.hpp"
#include "lgl/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace lgl;

std::vector<exponent> bench_monomials(int n, std::size_t count) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::int64_t> dist(-8, 8);
    std::vector<exponent> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::int64_t> entries(static_cast<std::size_t>(n));
        for (auto& v : entries) v = dist(rng);
        out.push_back(exponent(std::move(entries)));
    }
    return out;
}

std::vector<gaussian_rational> bench_twist(int n) {
    std::vector<gaussian_rational> twist{gaussian_rational(mpq_class(1, 2), mpq_class(0)),
                                         gaussian_rational::i()};
    twist.resize(static_cast<std::size_t>(n), gaussian_rational(0));
    return twist;
}

void commutator(benchmark::State& state, run_mode mode) {
    const int n = 4;
    auto monomials = bench_monomials(n, 64);
    auto twist = bench_twist(n);
    for (auto _ : state) {
        auto report = check_commutator_identity(n, twist, monomials, mode);
        benchmark::DoNotOptimize(report.ok);
    }
}

void closure(benchmark::State& state, run_mode mode) {
    module_id id = module_id::make_L(alpha_param::zero(4), 0, 2);
    window w{4, 0, 6};
    for (auto _ : state) {
        auto report = closure_check(id, w, mode);
        benchmark::DoNotOptimize(report.verdict);
    }
}

void axioms(benchmark::State& state, run_mode mode) {
    filtration_window w{3, -3, 3, 4};
    for (auto _ : state) {
        auto report = check_filtration_axioms(w, mode);
        benchmark::DoNotOptimize(report.checked);
    }
}

void sweep(benchmark::State& state, run_mode mode) {
    sweep_config config;
    config.ns = {2, 3};
    config.m_lo = -3;
    config.m_hi = 3;
    config.bound = 5;
    for (auto _ : state) {
        auto report = run_sweep(config, mode);
        benchmark::DoNotOptimize(report.all_pass);
    }
}

} // namespace

BENCHMARK_CAPTURE(commutator, serial, lgl::run_mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(commutator, openmp, lgl::run_mode::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closure, serial, lgl::run_mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closure, openmp, lgl::run_mode::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(axioms, serial, lgl::run_mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(axioms, openmp, lgl::run_mode::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, serial, lgl::run_mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, openmp, lgl::run_mode::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
