#include "rankone/boundary.hpp"
#include "rankone/completability.hpp"
#include "rankone/completion.hpp"
#include "rankone/diagonal.hpp"
#include "rankone/linalg.hpp"
#include "rankone/polynomial.hpp"
#include "rankone/segre.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rankone;

namespace {

// Every index of a d x d x d cube with probability p, fixed seed.
std::vector<MultiIndex> random_cube_subset(int d, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(p);
    std::vector<MultiIndex> out;
    for (const auto& i : IndexDomain({d, d, d}).indices()) {
        if (keep(rng)) out.push_back(i);
    }
    return out;
}

PartialTensor rank_one_restriction(int d, double p, std::uint64_t seed) {
    const IndexDomain domain({d, d, d});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 9);
    std::vector<std::vector<mpq_class>> f(3);
    for (auto& axis : f) {
        for (int k = 0; k < d; ++k) axis.emplace_back(num(rng) * (num(rng) % 2 ? 1 : -1));
    }
    std::map<MultiIndex, mpq_class> entries;
    for (const auto& i : random_cube_subset(d, p, seed + 1)) entries.emplace(i, f[0][i[0] - 1] * f[1][i[1] - 1] * f[2][i[2] - 1]);
    return PartialTensor(domain, entries);
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    auto a = segre_columns(IndexDomain({d, d, d}), random_cube_subset(d, 0.5, 1));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
    state.SetLabel(std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_MatroidClosure(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const IndexDomain domain({d, d, d});
    auto e = random_cube_subset(d, 0.25, 2);
    const IndexSet set(e.begin(), e.end());
    for (auto _ : state) benchmark::DoNotOptimize(matroid_closure(domain, set));
}
BENCHMARK(BM_MatroidClosure)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_Analyze(benchmark::State& state) {
    auto t = rank_one_restriction(static_cast<int>(state.range(0)), 0.4, 3);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(t));
}
BENCHMARK(BM_Analyze)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateRealCompletions(benchmark::State& state) {
    auto t = rank_one_restriction(static_cast<int>(state.range(0)), 0.4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_real_completions(t));
}
BENCHMARK(BM_EnumerateRealCompletions)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_BuildDescription(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto d = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_description(n, d));
}
BENCHMARK(BM_BuildDescription)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Args({2, 4})->Args({4, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_NthRootOracle(benchmark::State& state) {
    // just off the boundary, so the interval escalation has to work
    const std::vector<mpq_class> x{mpq_class(1, 9), mpq_class(4, 9) * mpq_class(1000001, 1000000)};
    for (auto _ : state) benchmark::DoNotOptimize(nth_root_sum_oracle(2, x));
}
BENCHMARK(BM_NthRootOracle)->Unit(benchmark::kMicrosecond);

static void BM_SturmRootCount(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    std::vector<mpq_class> roots;
    for (int k = 0; k < degree; ++k) roots.emplace_back(k * 7 % 11 - 5, k + 2);
    for (auto& r : roots) r.canonicalize();
    auto f = UniPoly::from_roots(roots);
    for (auto _ : state) benchmark::DoNotOptimize(count_real_roots(f, mpq_class(-10), mpq_class(10)));
}
BENCHMARK(BM_SturmRootCount)->DenseRange(2, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_Antidiag222(benchmark::State& state) {
    const mpq_class a(1, 8), b(3, 20), c(1, 10);
    for (auto _ : state) benchmark::DoNotOptimize(antidiag222_analysis(a, b, c));
}
BENCHMARK(BM_Antidiag222)->Unit(benchmark::kMicrosecond);

static void BM_JacobianDeterminant(benchmark::State& state) {
    auto p = simplex_parametrization(IndexDomain({2, 2, 3}), {{1, 1, 1}, {1, 2, 2}, {2, 1, 3}, {2, 2, 1}});
    for (auto _ : state) benchmark::DoNotOptimize(jacobian_determinant(p));
}
BENCHMARK(BM_JacobianDeterminant)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
