// Parallel kernels against their serial references.
#include "coxdescent/coxcheck.hpp"
#include "coxdescent/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace coxdescent;

namespace {

DenseMatrix random_matrix(const FieldTower& k, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    DenseMatrix m(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = k.element_at(rng() % k.size());
    }
    return m;
}

template <bool Parallel>
void BM_RowReduce(benchmark::State& state) {
    const FieldTower k(101, 2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix base = random_matrix(k, n, n + n / 2, 7);
    for (auto _ : state) {
        DenseMatrix m = base;
        if constexpr (Parallel) {
            benchmark::DoNotOptimize(row_reduce(m));
        } else {
            benchmark::DoNotOptimize(row_reduce_serial(m));
        }
    }
}

// A random (2,2),(1,2) pair on P^2 x P^2.
Ideal sample_ideal(const CoxAmbient& amb, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const PolyRing& ring = amb.ring().poly_ring();
    const FieldTower& k = ring.field();
    std::vector<Polynomial> fs;
    for (const Multidegree& d : {Multidegree{2, 2}, Multidegree{1, 2}}) {
        Polynomial f(amb.ring().base());
        for (const Monomial& m : monomials_of_degree(ring, d)) {
            f += Polynomial::monomial(amb.ring().base(), m, k.from_int(static_cast<std::int64_t>(rng() % 101)));
        }
        fs.push_back(f);
    }
    return Ideal(amb.ring_ptr(), fs);
}

template <bool Parallel>
void BM_Saturate(benchmark::State& state) {
    const int dims[] = {2, 2};
    const CoxAmbient amb = make_product_projective(dims, std::make_shared<const FieldTower>(101));
    for (auto _ : state) {
        const Ideal I = sample_ideal(amb, 11);
        if constexpr (Parallel) {
            benchmark::DoNotOptimize(saturate(I, amb.irrelevant()).groebner_basis().size());
        } else {
            benchmark::DoNotOptimize(saturate_serial(I, amb.irrelevant()).groebner_basis().size());
        }
    }
}

} // namespace

BENCHMARK(BM_RowReduce<true>)->Arg(64)->Arg(160);
BENCHMARK(BM_RowReduce<false>)->Arg(64)->Arg(160);
BENCHMARK(BM_Saturate<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Saturate<false>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
