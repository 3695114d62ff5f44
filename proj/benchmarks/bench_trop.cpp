#include <benchmark/benchmark.h>

#include <random>

#include "trop/assignment.hpp"
#include "trop/matrix.hpp"
#include "trop/solver.hpp"
#include "trop/spectral.hpp"

namespace {

trop::TropMatrix random_matrix(int rows, int cols, unsigned seed, double eps_prob = 0.0) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-1000, 1000);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    trop::TropMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (coin(rng) >= eps_prob) m.at(i, j) = trop::TropScalar(entry(rng));
    return m;
}

void BM_Maper(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto a = random_matrix(n, n, 1);
    for (auto _ : state) {
        auto res = trop::maper(a);
        benchmark::DoNotOptimize(res.value);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Maper)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_MaxCycleMean(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto a = random_matrix(n, n, 2, 0.2);
    for (auto _ : state) {
        auto lambda = trop::max_cycle_mean(a);
        benchmark::DoNotOptimize(lambda);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_MaxCycleMean)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_KleeneStar(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-1000, -1);
    trop::TropMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = trop::TropScalar(entry(rng));
    for (auto _ : state) {
        auto star = trop::kleene_star(a);
        benchmark::DoNotOptimize(star);
    }
}
BENCHMARK(BM_KleeneStar)->Arg(50)->Arg(100)->Arg(200);

void BM_Tensor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto a = random_matrix(n, n, 4);
    auto b = random_matrix(n, n, 5);
    for (auto _ : state) {
        auto t = trop::tensor(a, b);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Tensor)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveMatrixEquation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<trop::TropMatrix, trop::TropMatrix>> terms;
    for (int i = 0; i < 3; ++i)
        terms.emplace_back(random_matrix(n, n, 10 + static_cast<unsigned>(i), 0.2),
                           random_matrix(n, n, 20 + static_cast<unsigned>(i), 0.2));
    auto seed = random_matrix(n, n, 30, 0.2);
    trop::MatrixEquation probe(terms, trop::TropMatrix(n, n));
    trop::MatrixEquation eq(terms, trop::evaluate_equation(probe, seed));
    for (auto _ : state) {
        auto report = trop::solve_matrix_equation(eq);
        benchmark::DoNotOptimize(report.solvable);
    }
}
BENCHMARK(BM_SolveMatrixEquation)->Arg(4)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
